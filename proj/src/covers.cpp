#include "fpg/covers.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fpg/error.hpp"

namespace fpg {

Covering build_cover(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    invalid_input("build_cover: coset table has " + std::to_string(t.generator_count()) +
                  " generators, presentation has " + std::to_string(p.generator_count()));
  validate_table(p, t);

  const std::size_t n = t.size();
  const std::size_t g = p.generator_count();
  const std::size_t m = p.relator_count();
  auto edge_id = [g](std::size_t c, std::size_t j) { return c * g + j; };

  Covering cover{presentation_complex(p), TwoComplex(1, {}, {}), n, {}, {}, {}};
  cover.vertex_projection.assign(n, 0);

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  edges.reserve(n * g);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < g; ++j) {
      edges.push_back({c, t.act(c, gen(j))});
      labels.push_back(n == 1 ? p.name(j) : p.name(j) + "_" + std::to_string(c));
      cover.edge_projection.push_back(j);
    }

  std::vector<AttachingLoop> faces;
  faces.reserve(n * m);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < m; ++i) {
      AttachingLoop loop;
      std::size_t at = c;
      for (const Letter& l : p.relators()[i]) {
        if (l.sign > 0) {
          loop.steps.push_back({edge_id(at, l.generator), 1});
          at = t.act(at, l);
        } else {
          at = t.act(at, l);
          loop.steps.push_back({edge_id(at, l.generator), -1});
        }
      }
      faces.push_back(std::move(loop));
      cover.face_projection.push_back(i);
    }

  cover.total = TwoComplex(n, std::move(edges), std::move(faces),
                           disambiguate_names({}, labels));
  return cover;
}

std::size_t fiber_size(const Covering& c) {
  return static_cast<std::size_t>(
      std::count(c.vertex_projection.begin(), c.vertex_projection.end(), std::size_t{0}));
}

void validate_covering(const Covering& c) {
  const TwoComplex& base = c.base;
  const TwoComplex& total = c.total;
  if (c.vertex_projection.size() != total.vertex_count() ||
      c.edge_projection.size() != total.edge_count() ||
      c.face_projection.size() != total.face_count())
    invalid_input("projection maps do not cover every cell");

  auto check_fibers = [&](const std::vector<std::size_t>& proj, std::size_t base_cells,
                          const char* what) {
    std::vector<std::size_t> count(base_cells, 0);
    for (std::size_t b : proj) {
      if (b >= base_cells) invalid_input(std::string(what) + " projection out of range");
      ++count[b];
    }
    for (std::size_t k : count)
      if (k != c.degree)
        invalid_input(std::string("a base ") + what + " does not have degree-many preimages");
  };
  check_fibers(c.vertex_projection, base.vertex_count(), "vertex");
  check_fibers(c.edge_projection, base.edge_count(), "edge");
  check_fibers(c.face_projection, base.face_count(), "face");

  for (std::size_t e = 0; e < total.edge_count(); ++e) {
    const Edge& lifted = total.edge(e);
    const Edge& below = base.edge(c.edge_projection[e]);
    if (c.vertex_projection[lifted.tail] != below.tail ||
        c.vertex_projection[lifted.head] != below.head)
      invalid_input("edge projection does not commute with incidence");
  }
  for (std::size_t f = 0; f < total.face_count(); ++f) {
    const auto& lifted = total.face(f).steps;
    const auto& below = base.face(c.face_projection[f]).steps;
    if (lifted.size() != below.size()) invalid_input("lifted face has the wrong length");
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (c.edge_projection[lifted[i].edge] != below[i].edge ||
          lifted[i].direction != below[i].direction)
        invalid_input("face projection does not commute with attaching loops");
  }
  if (component_count(total) != 1) invalid_input("total complex is disconnected");
}

EdgePathPresentation subgroup_presentation_with_details(const Covering& c) {
  return edge_path_presentation(c.total, spanning_tree(c.total));
}

Presentation subgroup_presentation(const Covering& c) {
  return subgroup_presentation_with_details(c).presentation;
}

namespace {

std::size_t occurrences(const Word& w, std::size_t g) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [g](const Letter& l) { return l.generator == g; }));
}

Word substitute(const Word& w, std::size_t g, const Word& image) {
  const Word image_inverse = invert(image);
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (l.generator != g) {
      out.push_back(l);
    } else {
      const Word& piece = l.sign > 0 ? image : image_inverse;
      out.insert(out.end(), piece.begin(), piece.end());
    }
  }
  return Word(std::move(out));
}

Word drop_generator(const Word& w, std::size_t g) {
  Word out = w;
  for (Letter& l : out.letters)
    if (l.generator > g) --l.generator;
  return out;
}

}  // namespace

Presentation simplify(const Presentation& p) {
  std::vector<std::string> names = p.generator_names();
  std::vector<Word> rels = p.relators();

  for (;;) {
    std::vector<Word> kept;
    std::set<Word> seen;
    for (const Word& r : rels) {
      Word reduced = cyclic_reduce(r);
      if (reduced.empty()) continue;
      if (!seen.insert(cyclic_normal_form(reduced)).second) continue;
      kept.push_back(std::move(reduced));
    }
    rels = std::move(kept);

    // Shortest relator first; within it the lowest generator seen once.
    std::vector<std::size_t> order(rels.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rels[a].size() < rels[b].size(); });
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t ri : order) {
      for (std::size_t g = 0; g < names.size() && !pick; ++g)
        if (occurrences(rels[ri], g) == 1) pick = std::pair{ri, g};
      if (pick) break;
    }
    if (!pick) break;

    auto [ri, g] = *pick;
    Word r = rels[ri];
    auto pos = std::find_if(r.begin(), r.end(), [g = g](const Letter& l) { return l.generator == g; });
    std::rotate(r.letters.begin(), r.letters.begin() + (pos - r.begin()), r.letters.end());
    // r = x^s w = 1, so x = w^-1 when s = +1 and x = w when s = -1.
    const Word rest(std::vector<Letter>(r.letters.begin() + 1, r.letters.end()));
    const Word image = r[0].sign > 0 ? invert(rest) : rest;

    std::vector<Word> next;
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (i != ri) next.push_back(drop_generator(substitute(rels[i], g, image), g));
    rels = std::move(next);
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(g));
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace fpg
