#include "fpg/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fpg/error.hpp"

namespace fpg {

Word power(std::size_t g, long exponent) {
  Word w;
  const int sign = exponent < 0 ? -1 : 1;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
    w.letters.push_back({g, sign});
  return w;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.letters.front() != w.letters.back().inverse());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  r.letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word word_product(const Word& u, const Word& v) {
  std::vector<Letter> joined = u.letters;
  joined.insert(joined.end(), v.letters.begin(), v.letters.end());
  return free_reduce(Word(std::move(joined)));
}

Word word_product(const Word& u, const Word& v, std::size_t generator_count) {
  if (!letters_in_range(u, generator_count) || !letters_in_range(v, generator_count))
    invalid_input("word_product: letter outside the generator range");
  return word_product(u, v);
}

Word commutator(const Word& u, const Word& v) {
  return word_product(word_product(u, v), word_product(invert(u), invert(v)));
}

std::vector<long> abelianized_vector(const Word& w, std::size_t generator_count) {
  std::vector<long> v(generator_count, 0);
  for (const Letter& l : w) {
    if (l.generator >= generator_count)
      invalid_input("abelianized_vector: letter outside the generator range");
    v[l.generator] += l.sign;
  }
  return v;
}

Word shift_generators(const Word& w, std::size_t offset) {
  Word out = w;
  for (Letter& l : out.letters) l.generator += offset;
  return out;
}

bool letters_in_range(const Word& w, std::size_t generator_count) {
  return std::all_of(w.begin(), w.end(), [&](const Letter& l) {
    return l.generator < generator_count && (l.sign == 1 || l.sign == -1);
  });
}

namespace {

Word smallest_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

Word cyclic_normal_form(const Word& w) {
  return std::min(smallest_rotation(w), smallest_rotation(invert(w)));
}

bool equal_up_to_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Word rot = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rot == b) return true;
    std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
  }
  return false;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> disambiguate_names(std::span<const std::string> taken,
                                            std::span<const std::string> incoming) {
  std::set<std::string> used(taken.begin(), taken.end());
  // Names of `incoming` that are already unique keep priority over suffixes.
  std::set<std::string> reserved(incoming.begin(), incoming.end());
  std::vector<std::string> out;
  out.reserve(incoming.size());
  for (const std::string& name : incoming) {
    std::string candidate = name;
    for (int k = 2; used.count(candidate) != 0 || (candidate != name && reserved.count(candidate) != 0);
         ++k)
      candidate = name + "_" + std::to_string(k);
    used.insert(candidate);
    out.push_back(candidate);
  }
  return out;
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const std::string& n : names_) {
    if (!is_identifier(n)) invalid_input("generator name '" + n + "' is not an identifier");
    if (!seen.insert(n).second) invalid_input("duplicate generator name '" + n + "'");
  }
  relators_.reserve(relators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (!letters_in_range(relators[i], names_.size()))
      invalid_input("relator " + std::to_string(i + 1) + " uses an unknown generator");
    Word r = cyclic_reduce(relators[i]);
    if (r.empty())
      invalid_input("relator " + std::to_string(i + 1) + " reduces to the empty word");
    relators_.push_back(std::move(r));
  }
}

Presentation Presentation::free_group(std::vector<std::string> generator_names) {
  return Presentation(std::move(generator_names), {});
}

bool equal_up_to_relator_rotation(const Presentation& a, const Presentation& b) {
  if (a.generator_names() != b.generator_names()) return false;
  if (a.relator_count() != b.relator_count()) return false;
  for (std::size_t i = 0; i < a.relator_count(); ++i)
    if (!equal_up_to_rotation(a.relators()[i], b.relators()[i])) return false;
  return true;
}

namespace {

std::vector<std::string> joined_names(const Presentation& p1, const Presentation& p2) {
  std::vector<std::string> names = p1.generator_names();
  auto second = disambiguate_names(p1.generator_names(), p2.generator_names());
  names.insert(names.end(), second.begin(), second.end());
  return names;
}

std::vector<Word> joined_relators(const Presentation& p1, const Presentation& p2) {
  std::vector<Word> rels = p1.relators();
  for (const Word& r : p2.relators()) rels.push_back(shift_generators(r, p1.generator_count()));
  return rels;
}

}  // namespace

Presentation free_product(const Presentation& p1, const Presentation& p2) {
  return Presentation(joined_names(p1, p2), joined_relators(p1, p2));
}

Presentation direct_product(const Presentation& p1, const Presentation& p2) {
  std::vector<Word> rels = joined_relators(p1, p2);
  const std::size_t g1 = p1.generator_count();
  for (std::size_t i = 0; i < g1; ++i)
    for (std::size_t j = 0; j < p2.generator_count(); ++j)
      rels.push_back(commutator(Word{gen(i)}, Word{gen(g1 + j)}));
  return Presentation(joined_names(p1, p2), std::move(rels));
}

Presentation amalgamated_product(const Presentation& p1, const Presentation& p2,
                                 const Presentation& amalgamated, const GeneratorMap& phi1,
                                 const GeneratorMap& phi2) {
  const std::size_t h = amalgamated.generator_count();
  if (phi1.images.size() != h || phi2.images.size() != h)
    invalid_input("amalgamated_product: maps must give one image per subgroup generator");
  for (std::size_t i = 0; i < h; ++i) {
    if (!letters_in_range(phi1.images[i], p1.generator_count()))
      invalid_input("amalgamated_product: first map image out of range");
    if (!letters_in_range(phi2.images[i], p2.generator_count()))
      invalid_input("amalgamated_product: second map image out of range");
  }
  std::vector<Word> rels = joined_relators(p1, p2);
  for (std::size_t i = 0; i < h; ++i) {
    Word r = cyclic_reduce(word_product(
        phi1.images[i], invert(shift_generators(phi2.images[i], p1.generator_count()))));
    if (!r.empty()) rels.push_back(std::move(r));
  }
  return Presentation(joined_names(p1, p2), std::move(rels));
}

}  // namespace fpg
