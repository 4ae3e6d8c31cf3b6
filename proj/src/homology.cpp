#include "fpg/homology.hpp"

#include <algorithm>
#include <set>

#include "fpg/covers.hpp"
#include "fpg/error.hpp"

namespace fpg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : IntMatrix(rows, cols) {
  if (entries.size() != rows * cols) invalid_input("IntMatrix: wrong number of entries");
  std::size_t i = 0;
  for (long v : entries) data_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v.is_zero(); });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) invalid_input("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

// Working state for the Smith reduction; U and V are only updated when
// transforms were requested.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& a, bool with_transforms) : a_(a), track_(with_transforms) {
    if (track_) {
      u_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
    }
  }

  SmithForm run() {
    const std::size_t diag = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    while (t < diag) {
      auto pivot = smallest_entry(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      if (!clear_row_and_column(t)) continue;
      if (auto bad = non_divisible_row(t)) {
        add_row(t, *bad, 1);
        continue;
      }
      if (a_(t, t) < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a_(i, i));
    if (track_) {
      out.left = std::move(u_);
      out.right = std::move(v_);
    }
    return out;
  }

 private:
  static bool abs_less(const Integer& x, const Integer& y) {
    const bool xn = x.sign() < 0, yn = y.sign() < 0;
    if (!xn && !yn) return x < y;
    if (xn && yn) return y < x;
    if (xn) return -x < y;
    return x < -y;
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& v = a_(i, j);
        if (v.is_zero()) continue;
        if (!best || abs_less(v, a_(best->first, best->second))) {
          best = {i, j};
          if (v == 1 || v == -1) return best;
        }
      }
    return best;
  }

  // Reduces row t and column t modulo the pivot. Returns true when both are
  // cleared; otherwise a smaller remainder is left for the next pivot.
  bool clear_row_and_column(std::size_t t) {
    bool cleared = true;
    const Integer pivot = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (a_(i, t).is_zero()) continue;
      const Integer q = a_(i, t) / pivot;
      if (!q.is_zero()) add_row(i, t, -q);
      if (!a_(i, t).is_zero()) cleared = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (a_(t, j).is_zero()) continue;
      const Integer q = a_(t, j) / pivot;
      if (!q.is_zero()) add_col(j, t, -q);
      if (!a_(t, j).is_zero()) cleared = false;
    }
    return cleared;
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const Integer& pivot = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (!a_(i, j).is_zero() && Integer(a_(i, j) % pivot) != 0) return i;
    return std::nullopt;
  }

  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (!a_(src, j).is_zero()) a_(dst, j) += k * a_(src, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_(src, j).is_zero()) u_(dst, j) += k * u_(src, j);
  }

  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < a_.rows(); ++i)
      if (!a_(i, src).is_zero()) a_(i, dst) += k * a_(i, src);
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!v_(i, src).is_zero()) v_(i, dst) += k * v_(i, src);
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_(r, j), a_(s, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(r, j), u_(s, j));
  }

  void swap_cols(std::size_t c, std::size_t d) {
    if (c == d) return;
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, c), a_(i, d));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, c), v_(i, d));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(r, j) = -a_(r, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_, v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, bool with_transforms) {
  return SmithReducer(a, with_transforms).run();
}

AbelianGroup make_abelian_group(std::size_t free_rank, std::vector<Integer> torsion) {
  IntMatrix diag(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diag(i, i) = torsion[i];
  AbelianGroup g = cokernel(diag);
  g.free_rank += free_rank;
  return g;
}

AbelianGroup cokernel(const IntMatrix& a) {
  // Zero and repeated columns do not change the column span.
  std::set<std::vector<Integer>> distinct;
  std::vector<std::vector<Integer>> columns;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<Integer> col(a.rows());
    bool zero = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      col[r] = a(r, c);
      zero = zero && col[r].is_zero();
    }
    if (!zero && distinct.insert(col).second) columns.push_back(std::move(col));
  }
  IntMatrix compact(a.rows(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r) compact(r, c) = columns[c][r];

  const SmithForm snf = smith_normal_form(compact);
  AbelianGroup g;
  g.free_rank = a.rows() - snf.rank();
  for (const Integer& d : snf.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> torsion = a.torsion;
  torsion.insert(torsion.end(), b.torsion.begin(), b.torsion.end());
  return make_abelian_group(a.free_rank + b.free_rank, std::move(torsion));
}

BoundaryMaps boundary_matrices(const TwoComplex& k) {
  BoundaryMaps maps{IntMatrix(k.vertex_count(), k.edge_count()),
                    IntMatrix(k.edge_count(), k.face_count())};
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    maps.d1(k.edge(e).head, e) += 1;
    maps.d1(k.edge(e).tail, e) -= 1;
  }
  for (std::size_t f = 0; f < k.face_count(); ++f)
    for (const LoopStep& s : k.face(f).steps) maps.d2(s.edge, f) += s.direction;
  return maps;
}

Homology homology(const TwoComplex& k) {
  const BoundaryMaps maps = boundary_matrices(k);
  const SmithForm s1 = smith_normal_form(maps.d1);
  const SmithForm s2 = smith_normal_form(maps.d2);
  Homology h;
  h.h0.free_rank = k.vertex_count() - s1.rank();
  h.h1.free_rank = k.edge_count() - s1.rank() - s2.rank();
  for (const Integer& d : s2.invariant_factors)
    if (d > 1) h.h1.torsion.push_back(d);
  h.h2.free_rank = k.face_count() - s2.rank();
  return h;
}

AbelianGroup abelianization(const Presentation& p) {
  IntMatrix exponents(p.generator_count(), p.relator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const auto v = abelianized_vector(p.relators()[i], p.generator_count());
    for (std::size_t j = 0; j < v.size(); ++j) exponents(j, i) = v[j];
  }
  return cokernel(exponents);
}

IntMatrix coinvariant_relation_matrix(const Presentation& p, const CosetTable& regular) {
  const Covering cayley = build_cover(p, regular);
  const TwoComplex& graph = cayley.total;
  const SpanningTree tree = spanning_tree(graph);
  const std::size_t n = regular.size();
  const std::size_t g = p.generator_count();

  constexpr std::size_t kTree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> basis_index(graph.edge_count(), kTree);
  std::vector<std::size_t> basis_edges;
  for (std::size_t e = 0; e < graph.edge_count(); ++e)
    if (!tree.contains(e)) {
      basis_index[e] = basis_edges.size();
      basis_edges.push_back(e);
    }
  const std::size_t basis = basis_edges.size();

  // Tree path from vertex 0 to v as a signed edge chain.
  std::vector<std::vector<LoopStep>> path(n);
  for (std::size_t v : tree.visit_order) {
    if (!tree.parent_edge[v]) continue;
    const std::size_t e = *tree.parent_edge[v];
    const Edge& edge = graph.edge(e);
    const bool forward = edge.head == v;
    path[v] = path[forward ? edge.tail : edge.head];
    path[v].push_back({e, forward ? 1 : -1});
  }

  IntMatrix rows(g * basis, basis);
  for (std::size_t j = 0; j < g; ++j) {
    // Left translation by x_j commutes with the right action on cosets, so
    // it is determined by where it sends coset 0.
    std::vector<std::size_t> image(n);
    image[0] = regular.act(0, gen(j));
    for (std::size_t v : tree.visit_order) {
      if (!tree.parent_edge[v]) continue;
      const std::size_t e = *tree.parent_edge[v];
      const Edge& edge = graph.edge(e);
      const std::size_t k = cayley.edge_projection[e];
      image[v] = edge.head == v ? regular.act(image[edge.tail], gen(k))
                                : regular.act(image[edge.head], gen(k, -1));
    }
    auto translated = [&](std::size_t e) {
      return image[graph.edge(e).tail] * g + cayley.edge_projection[e];
    };

    for (std::size_t i = 0; i < basis; ++i) {
      const std::size_t e = basis_edges[i];
      std::vector<LoopStep> cycle = path[graph.edge(e).tail];
      cycle.push_back({e, 1});
      for (auto it = path[graph.edge(e).head].rbegin(); it != path[graph.edge(e).head].rend(); ++it)
        cycle.push_back({it->edge, -it->direction});

      const std::size_t row = j * basis + i;
      for (const LoopStep& s : cycle) {
        const std::size_t b = basis_index[translated(s.edge)];
        if (b != kTree) rows(row, b) += s.direction;
      }
      rows(row, i) -= 1;
    }
  }
  return rows;
}

AbelianGroup schur_multiplier_finite(const Presentation& p, std::size_t max_cosets) {
  const CosetTable regular = todd_coxeter(p, SubgroupSpec{}, max_cosets);
  const IntMatrix relations = coinvariant_relation_matrix(p, regular);
  AbelianGroup quotient = cokernel(relations.transposed());
  if (quotient.free_rank != p.generator_count())
    throw Error(ErrorKind::FreeRankMismatch,
                "R/[F,R] has free rank " + std::to_string(quotient.free_rank) + ", expected " +
                    std::to_string(p.generator_count()));
  quotient.free_rank = 0;
  return quotient;
}

MultiplicationTable multiplication_table(const CosetTable& regular) {
  const std::size_t n = regular.size();
  // A word carrying coset 0 to each coset, along first appearances.
  std::vector<Word> reach(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<std::size_t> order{0};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t col = 0; col < regular.column_count(); ++col) {
      const std::size_t d = regular.entry(order[i], col);
      if (seen[d]) continue;
      seen[d] = true;
      reach[d] = reach[order[i]];
      reach[d].letters.push_back({col / 2, col % 2 == 0 ? 1 : -1});
      order.push_back(d);
    }
  MultiplicationTable mult;
  mult.identity = 0;
  mult.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult.product[a][b] = trace(regular, a, reach[b]);
  // Left translations must commute with the right action.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t col = 0; col < regular.column_count(); ++col)
        if (mult.product[a][regular.entry(b, col)] != regular.entry(mult.product[a][b], col))
          invalid_input("multiplication_table: the table is not a regular representation");
  return mult;
}

AbelianGroup bar_h2_oracle(const MultiplicationTable& mult) {
  const std::size_t n = mult.order();
  if (n > kBarOracleMaxOrder)
    throw Error(ErrorKind::InputTooLarge, "bar_h2_oracle: group order " + std::to_string(n) +
                                              " exceeds " + std::to_string(kBarOracleMaxOrder));
  if (n == 0 || mult.identity >= n) invalid_input("bar_h2_oracle: empty table or bad identity");
  for (std::size_t a = 0; a < n; ++a) {
    if (mult.product[a].size() != n) invalid_input("bar_h2_oracle: table is not square");
    for (std::size_t b = 0; b < n; ++b)
      if (mult.product[a][b] >= n) invalid_input("bar_h2_oracle: entry out of range");
    if (mult.product[a][mult.identity] != a || mult.product[mult.identity][a] != a)
      invalid_input("bar_h2_oracle: identity element does not act trivially");
  }

  // Normalized chains: cells [g1|...|gk] with every gi != identity.
  std::vector<std::size_t> index(n, 0), element;
  for (std::size_t a = 0; a < n; ++a)
    if (a != mult.identity) {
      index[a] = element.size();
      element.push_back(a);
    }
  const std::size_t k = element.size();
  const std::size_t e = mult.identity;
  auto mul = [&](std::size_t a, std::size_t b) { return mult.product[a][b]; };

  // d2 [a|b] = [b] - [ab] + [a]
  IntMatrix d2(k, k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t a = element[i], b = element[j], col = i * k + j;
      d2(index[b], col) += 1;
      if (mul(a, b) != e) d2(index[mul(a, b)], col) -= 1;
      d2(index[a], col) += 1;
    }

  // d3 [a|b|c] = [b|c] - [ab|c] + [a|bc] - [a|b]
  IntMatrix d3(k * k, k * k * k);
  auto cell2 = [&](std::size_t a, std::size_t b) { return index[a] * k + index[b]; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t a = element[i], b = element[j], c = element[l];
        const std::size_t col = (i * k + j) * k + l;
        d3(cell2(b, c), col) += 1;
        if (mul(a, b) != e) d3(cell2(mul(a, b), c), col) -= 1;
        if (mul(b, c) != e) d3(cell2(a, mul(b, c)), col) += 1;
        d3(cell2(a, b), col) -= 1;
      }

  const std::size_t rank_d2 = k - cokernel(d2).free_rank;
  const AbelianGroup quotient = cokernel(d3);  // C2 / im d3
  AbelianGroup h2;
  h2.free_rank = quotient.free_rank - rank_d2;
  h2.torsion = quotient.torsion;
  return h2;
}

}  // namespace fpg
