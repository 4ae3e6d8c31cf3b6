#pragma once

// Coset enumeration (Felsch strategy) and low-index subgroup search.

#include <cstddef>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

struct SubgroupSpec {
  std::vector<Word> words;
  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Column of the table for a letter: x_j -> 2j, x_j^-1 -> 2j + 1.
inline std::size_t column_of(const Letter& l) { return 2 * l.generator + (l.sign > 0 ? 0 : 1); }

/// A complete coset table: the right action of every generator and its
/// inverse on the cosets 0..n-1 of a subgroup, numbered by first appearance.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::vector<std::size_t> action, SubgroupSpec subgroup);

  std::size_t size() const { return size_; }
  std::size_t generator_count() const { return generator_count_; }
  std::size_t column_count() const { return 2 * generator_count_; }
  const SubgroupSpec& subgroup() const { return subgroup_; }

  std::size_t entry(std::size_t coset, std::size_t column) const {
    return action_[coset * column_count() + column];
  }
  std::size_t act(std::size_t coset, const Letter& l) const { return entry(coset, column_of(l)); }

  /// Rows flattened coset-major in column order x1, x1^-1, x2, ...
  const std::vector<std::size_t>& rows() const { return action_; }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t generator_count_;
  std::size_t size_;
  std::vector<std::size_t> action_;
  SubgroupSpec subgroup_;
};

/// Image of `coset` under the right action of `w`. Throws InvalidInput for an
/// out-of-range coset or letter.
std::size_t trace(const CosetTable& t, std::size_t coset, const Word& w);

/// Checks that the table is complete, that x and x^-1 act inversely, that
/// every relator fixes every coset, that every subgroup word fixes coset 0 and
/// that the numbering is canonical. Throws InvalidInput describing the first
/// violation.
void validate_table(const Presentation& p, const CosetTable& t);

/// True when every coset is reachable from coset 0.
bool is_transitive(const CosetTable& t);

/// Enumerates the cosets of the subgroup generated by `subgroup`. Throws
/// CosetLimitExceeded once more than `max_cosets` cosets are simultaneously
/// alive.
CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& subgroup,
                        std::size_t max_cosets);

/// One canonical table per conjugacy class of subgroups of index at most
/// `max_index`, sorted by index and then by table entries.
std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index);

}  // namespace fpg
