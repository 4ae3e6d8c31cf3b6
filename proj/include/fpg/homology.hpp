#pragma once

// Integer linear algebra and cellular homology of 2-complexes, plus the Schur
// multiplier of a finite group.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "fpg/complexes.hpp"
#include "fpg/cosets.hpp"
#include "fpg/words.hpp"

namespace fpg {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  std::vector<Integer> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
  std::optional<IntMatrix> left;           // U
  std::optional<IntMatrix> right;          // V, with U * A * V diagonal

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Unimodular row and column reduction to diagonal form. Pivots are the
/// nonzero entries of least absolute value, earliest in row-major order.
SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms = false);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup make_abelian_group(std::size_t free_rank, std::vector<Integer> torsion);

/// Z^rows / column span of `a`.
AbelianGroup cokernel(const IntMatrix& a);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

struct BoundaryMaps {
  IntMatrix d1;  // vertices x edges
  IntMatrix d2;  // edges x faces
};

BoundaryMaps boundary_matrices(const TwoComplex& k);

struct Homology {
  AbelianGroup h0, h1, h2;
};

Homology homology(const TwoComplex& k);

/// Cokernel of the generators x relators exponent-sum matrix.
AbelianGroup abelianization(const Presentation& p);

/// Relation matrix whose cokernel is R/[F,R] for the group enumerated by the
/// regular table `t`: rows x.b - b over generators x and a cycle basis b of
/// the Cayley graph, in cycle-basis coordinates.
IntMatrix coinvariant_relation_matrix(const Presentation& p, const CosetTable& regular);

/// Schur multiplier of a finite group, as the torsion of R/[F,R]. Throws
/// CosetLimitExceeded if the group does not enumerate within `max_cosets`,
/// FreeRankMismatch if the quotient's free rank differs from the generator
/// count.
AbelianGroup schur_multiplier_finite(const Presentation& p, std::size_t max_cosets);

/// product[a][b] = index of a*b. Element `identity` is the neutral element.
struct MultiplicationTable {
  std::vector<std::vector<std::size_t>> product;
  std::size_t identity = 0;

  std::size_t order() const { return product.size(); }
};

/// Group structure on the cosets of a normal subgroup (for the trivial
/// subgroup, the regular representation). Throws InvalidInput otherwise.
MultiplicationTable multiplication_table(const CosetTable& regular);

inline constexpr std::size_t kBarOracleMaxOrder = 12;

/// H_2(G; Z) from the normalized bar complex. Throws InputTooLarge above
/// kBarOracleMaxOrder elements and InvalidInput for a malformed table.
AbelianGroup bar_h2_oracle(const MultiplicationTable& mult);

}  // namespace fpg
