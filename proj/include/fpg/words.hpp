#pragma once

// Free-group words and finite presentations.
//
// A word is a plain sequence of signed generator letters; powers are always
// expanded. Presentations keep their relators freely and cyclically reduced.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Shorthand for a letter x_g^sign.
inline Letter gen(std::size_t g, int sign = 1) { return {g, sign}; }

/// Word made of |exponent| copies of x_g (or its inverse).
Word power(std::size_t g, long exponent);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert(const Word& w);

/// Reduced concatenation u·v.
Word word_product(const Word& u, const Word& v);

/// As above, but rejects letters outside [0, generator_count) with
/// InvalidInput.
Word word_product(const Word& u, const Word& v, std::size_t generator_count);

/// Commutator [u, v] = u v u^-1 v^-1, reduced.
Word commutator(const Word& u, const Word& v);

/// Exponent sum of every generator (image in Z^g).
std::vector<long> abelianized_vector(const Word& w, std::size_t generator_count);

Word shift_generators(const Word& w, std::size_t offset);

bool letters_in_range(const Word& w, std::size_t generator_count);

/// Cyclic word normal form up to rotation and inversion: the lexicographically
/// smallest rotation of w or w^-1. Input must be cyclically reduced.
Word cyclic_normal_form(const Word& w);

/// True when two cyclically reduced words agree up to cyclic rotation.
bool equal_up_to_rotation(const Word& a, const Word& b);

/// Makes names from `incoming` distinct from `taken` (and from each other) by
/// appending "_2", "_3", ... to clashing names.
std::vector<std::string> disambiguate_names(std::span<const std::string> taken,
                                            std::span<const std::string> incoming);

bool is_identifier(std::string_view name);

class Presentation {
 public:
  Presentation() = default;

  /// Validates names, reduces each relator freely and cyclically. Throws
  /// InvalidInput for duplicate or malformed names, out-of-range letters or
  /// relators that reduce to the empty word.
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  /// Free group on the given names.
  static Presentation free_group(std::vector<std::string> generator_names);

  std::size_t generator_count() const { return names_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& name(std::size_t g) const { return names_[g]; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Same generator names and, relator by relator, equal up to cyclic rotation.
bool equal_up_to_relator_rotation(const Presentation& a, const Presentation& b);

/// Images of the generators of a source presentation as words over a target.
struct GeneratorMap {
  std::vector<Word> images;
};

Presentation free_product(const Presentation& p1, const Presentation& p2);
Presentation direct_product(const Presentation& p1, const Presentation& p2);

/// Presentation-level amalgam: relators of both factors plus
/// phi1(h) phi2(h)^-1 for every generator h of `amalgamated`. Identifications
/// that reduce to the empty word hold trivially and are omitted.
Presentation amalgamated_product(const Presentation& p1, const Presentation& p2,
                                 const Presentation& amalgamated, const GeneratorMap& phi1,
                                 const GeneratorMap& phi2);

}  // namespace fpg
