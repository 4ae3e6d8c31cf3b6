#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fpg/complexes.hpp"
#include "fpg/cosets.hpp"
#include "fpg/covers.hpp"
#include "fpg/error.hpp"
#include "fpg/homology.hpp"
#include "fpg/text.hpp"

namespace fpg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDefaultMaxCosets = 1000000;

Presentation read_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid_input("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const Integer& d : g.torsion) torsion.push_back(integer_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

Json complex_json(const TwoComplex& k) {
  Json edges = Json::array();
  for (const Edge& e : k.edges()) edges.push_back({e.tail, e.head});
  Json labels = Json::array();
  for (std::size_t e = 0; e < k.edge_count(); ++e) labels.push_back(k.edge_label(e));
  Json faces = Json::array();
  for (const AttachingLoop& loop : k.faces()) {
    Json steps = Json::array();
    for (const LoopStep& s : loop.steps) steps.push_back({s.edge, s.direction});
    faces.push_back(steps);
  }
  return Json{{"vertex_count", k.vertex_count()},
              {"edge_count", k.edge_count()},
              {"face_count", k.face_count()},
              {"edges", edges},
              {"edge_labels", labels},
              {"faces", faces}};
}

Json counts_json(const TwoComplex& k) {
  return Json{{"vertices", k.vertex_count()}, {"edges", k.edge_count()}, {"faces", k.face_count()}};
}

Json table_rows_json(const CosetTable& t) {
  Json rows = Json::array();
  for (std::size_t c = 0; c < t.size(); ++c) {
    Json row = Json::array();
    for (std::size_t col = 0; col < t.column_count(); ++col) row.push_back(t.entry(c, col));
    rows.push_back(row);
  }
  return rows;
}

Json presentation_json(const Presentation& p) {
  return Json{{"generators", p.generator_count()},
              {"relators", p.relator_count()},
              {"presentation", format_presentation(p)}};
}

SubgroupSpec subgroup_from(const Presentation& p, const std::string& words) {
  return SubgroupSpec{parse_word_list(words, p.generator_names())};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Finitely presented groups and their 2-complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string file, file2, file_h, words, map1, map2;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_index = 1;
  bool simplify_output = false;

  auto* info = app.add_subcommand("info", "Generator, relator and cell counts");
  auto* complex = app.add_subcommand("complex", "Presentation complex as a cell list");
  auto* abelianize = app.add_subcommand("abelianize", "Abelianization of the group");
  auto* homology_cmd = app.add_subcommand("homology", "H0, H1, H2 of the presentation complex");
  auto* subgroup = app.add_subcommand("subgroup", "Presentation of a finite-index subgroup");
  auto* cover = app.add_subcommand("cover", "Covering complex for a finite-index subgroup");
  auto* multiplier = app.add_subcommand("multiplier", "Schur multiplier of a finite group");
  auto* low_index = app.add_subcommand("low-index", "Subgroups of small index up to conjugacy");
  auto* free_prod = app.add_subcommand("free-product", "Free product of two presentations");
  auto* direct_prod = app.add_subcommand("direct-product", "Direct product of two presentations");
  auto* amalgam = app.add_subcommand("amalgam", "Amalgamated free product");

  for (auto* cmd : {info, complex, abelianize, homology_cmd, subgroup, cover, multiplier, low_index,
                    free_prod, direct_prod, amalgam})
    cmd->add_option("file", file, "Presentation file (.pres)")->required();
  for (auto* cmd : {free_prod, direct_prod, amalgam})
    cmd->add_option("file2", file2, "Second presentation file")->required();
  amalgam->add_option("subgroup_file", file_h, "Presentation of the amalgamated subgroup")
      ->required();
  amalgam->add_option("--map1", map1, "Images in the first factor, \"h=w;...\"")->required();
  amalgam->add_option("--map2", map2, "Images in the second factor, \"h=w;...\"")->required();
  for (auto* cmd : {subgroup, cover}) {
    cmd->add_option("-w,--words", words, "Subgroup generators separated by ';'");
    cmd->add_option("--max-cosets", max_cosets, "Live coset limit")->check(CLI::PositiveNumber);
  }
  subgroup->add_flag("--simplify", simplify_output, "Apply Tietze clean-up to the result");
  multiplier->add_option("--max-cosets", max_cosets, "Live coset limit")
      ->check(CLI::PositiveNumber);
  low_index->add_option("-n,--max-index", max_index, "Largest index")
      ->required()
      ->check(CLI::PositiveNumber);

  auto emit = [&](const Json& doc) { out << (pretty ? doc.dump(2) : doc.dump()) << "\n"; };

  std::vector<std::string> argv_storage{"fpg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(Json{{"error", "UsageError"}, {"message", e.what()}});
    return kExitError;
  }

  try {
    Json doc;
    if (*info) {
      const Presentation p = read_presentation(file);
      const TwoComplex k = presentation_complex(p);
      Json lengths = Json::array();
      for (const Word& r : p.relators()) lengths.push_back(r.size());
      doc = Json{{"generators", p.generator_count()},
                 {"relators", p.relator_count()},
                 {"relator_lengths", lengths},
                 {"presentation_complex", counts_json(k)},
                 {"euler_characteristic", euler_characteristic(k)}};
    } else if (*complex) {
      doc = Json{{"complex", complex_json(presentation_complex(read_presentation(file)))}};
    } else if (*abelianize) {
      doc = group_json(abelianization(read_presentation(file)));
    } else if (*homology_cmd) {
      const Homology h = homology(presentation_complex(read_presentation(file)));
      doc = Json{{"H0", group_json(h.h0)}, {"H1", group_json(h.h1)}, {"H2", group_json(h.h2)}};
    } else if (*subgroup) {
      const Presentation p = read_presentation(file);
      const CosetTable t = todd_coxeter(p, subgroup_from(p, words), max_cosets);
      const Covering c = build_cover(p, t);
      const EdgePathPresentation sub = subgroup_presentation_with_details(c);
      const Presentation result = simplify_output ? simplify(sub.presentation) : sub.presentation;
      doc = Json{{"index", t.size()},
                 {"cover", counts_json(c.total)},
                 {"dropped_relators", sub.dropped_relators},
                 {"simplified", simplify_output}};
      const Json fields = presentation_json(result);
      for (const auto& [key, value] : fields.items()) doc[key] = value;
    } else if (*cover) {
      const Presentation p = read_presentation(file);
      const CosetTable t = todd_coxeter(p, subgroup_from(p, words), max_cosets);
      const Covering c = build_cover(p, t);
      doc = Json{{"degree", c.degree},
                 {"fiber_size", fiber_size(c)},
                 {"coset_table", table_rows_json(t)},
                 {"complex", complex_json(c.total)},
                 {"projections",
                  Json{{"vertices", c.vertex_projection},
                       {"edges", c.edge_projection},
                       {"faces", c.face_projection}}}};
    } else if (*multiplier) {
      doc = group_json(schur_multiplier_finite(read_presentation(file), max_cosets));
    } else if (*low_index) {
      const Presentation p = read_presentation(file);
      const auto tables = low_index_subgroups(p, max_index);
      Json counts = Json::array();
      for (std::size_t n = 1; n <= max_index; ++n) {
        const auto k = std::count_if(tables.begin(), tables.end(),
                                     [n](const CosetTable& t) { return t.size() == n; });
        counts.push_back(Json{{"index", n}, {"count", k}});
      }
      Json list = Json::array();
      for (const CosetTable& t : tables) {
        Json gens = Json::array();
        for (const Word& w : t.subgroup().words) gens.push_back(format_word(w, p.generator_names()));
        list.push_back(Json{{"index", t.size()}, {"subgroup_generators", gens}, {"rows", table_rows_json(t)}});
      }
      doc = Json{{"max_index", max_index}, {"total", tables.size()}, {"counts", counts}, {"tables", list}};
    } else if (*free_prod) {
      doc = presentation_json(free_product(read_presentation(file), read_presentation(file2)));
    } else if (*direct_prod) {
      doc = presentation_json(direct_product(read_presentation(file), read_presentation(file2)));
    } else if (*amalgam) {
      const Presentation p1 = read_presentation(file);
      const Presentation p2 = read_presentation(file2);
      const Presentation h = read_presentation(file_h);
      const GeneratorMap phi1 = parse_generator_map(map1, h, p1);
      const GeneratorMap phi2 = parse_generator_map(map2, h, p2);
      doc = presentation_json(amalgamated_product(p1, p2, h, phi1, phi2));
    }
    emit(doc);
    return kExitOk;
  } catch (const ParseError& e) {
    emit(Json{{"error", to_string(e.kind())},
              {"message", e.what()},
              {"line", e.line()},
              {"column", e.column()}});
    return kExitError;
  } catch (const Error& e) {
    emit(Json{{"error", to_string(e.kind())}, {"message", e.what()}});
    return e.kind() == ErrorKind::CosetLimitExceeded ? kExitCosetLimit : kExitError;
  }
}

}  // namespace fpg::cli
