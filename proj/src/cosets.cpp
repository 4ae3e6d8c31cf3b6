#include "fpg/cosets.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <span>

#include "fpg/error.hpp"

namespace fpg {

namespace {

constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

using Columns = std::vector<std::size_t>;

Columns to_columns(const Word& w) {
  Columns c;
  c.reserve(w.size());
  for (const Letter& l : w) c.push_back(column_of(l));
  return c;
}

// Every cyclic conjugate of every relator and of its inverse, bucketed by the
// column of its first letter.
std::vector<std::vector<Columns>> relator_cycles(const Presentation& p) {
  std::vector<std::set<Columns>> buckets(2 * p.generator_count());
  for (const Word& r : p.relators()) {
    for (const Word& w : {r, invert(r)}) {
      Columns c = to_columns(w);
      for (std::size_t i = 0; i < c.size(); ++i) {
        buckets[c.front()].insert(c);
        std::rotate(c.begin(), c.begin() + 1, c.end());
      }
    }
  }
  std::vector<std::vector<Columns>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(b.begin(), b.end());
  return out;
}

// Renumbers a complete transitive table by first appearance from coset 0.
std::vector<std::size_t> standardize(const std::vector<std::size_t>& rows, std::size_t cols,
                                     std::span<const std::size_t> live_from_zero,
                                     std::size_t total_rows) {
  std::vector<std::size_t> new_id(total_rows, kUndefined);
  std::vector<std::size_t> order{live_from_zero.front()};
  new_id[order[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t col = 0; col < cols; ++col) {
      const std::size_t d = rows[order[i] * cols + col];
      if (new_id[d] == kUndefined) {
        new_id[d] = order.size();
        order.push_back(d);
      }
    }
  std::vector<std::size_t> out(order.size() * cols);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t col = 0; col < cols; ++col)
      out[i * cols + col] = new_id[rows[order[i] * cols + col]];
  return out;
}

// Felsch-style enumerator. Coset ids are never reused; dead cosets are
// tracked with a union-find whose representative is the smaller id.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const SubgroupSpec& h, std::size_t max_cosets)
      : cols_(2 * p.generator_count()),
        max_cosets_(max_cosets),
        cycles_(relator_cycles(p)),
        relators_(),
        subgroup_() {
    for (const Word& r : p.relators()) relators_.push_back(to_columns(r));
    for (const Word& w : h.words) subgroup_.push_back(to_columns(free_reduce(w)));
    add_coset();
  }

  std::vector<std::size_t> run() {
    for (const Columns& w : subgroup_) {
      scan(0, w, true);
      process_deductions();
    }
    for (;;) {
      process_deductions();
      if (auto gap = first_gap()) {
        define(gap->first, gap->second);
        continue;
      }
      if (!verify_closed()) continue;
      break;
    }
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (parent_[c] == c) live.push_back(c);
    return standardize(table_, cols_, live, parent_.size());
  }

 private:
  std::size_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  bool is_live(std::size_t c) const { return parent_[c] == c; }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  std::size_t add_coset() {
    if (live_ + 1 > max_cosets_)
      throw Error(ErrorKind::CosetLimitExceeded,
                  "coset enumeration exceeded " + std::to_string(max_cosets_) + " live cosets");
    const std::size_t id = parent_.size();
    parent_.push_back(id);
    table_.resize(table_.size() + cols_, kUndefined);
    ++live_;
    return id;
  }

  void define(std::size_t c, std::size_t col) {
    const std::size_t d = add_coset();
    at(c, col) = d;
    at(d, col ^ 1) = c;
    deductions_.push_back({c, col});
  }

  std::optional<std::pair<std::size_t, std::size_t>> first_gap() {
    for (; gap_hint_ < parent_.size(); ++gap_hint_) {
      if (!is_live(gap_hint_)) continue;
      for (std::size_t col = 0; col < cols_; ++col)
        if (at(gap_hint_, col) == kUndefined) return std::pair{gap_hint_, col};
    }
    return std::nullopt;
  }

  // Traces w around coset c from both ends. Closes a single-letter gap by
  // deduction, merges cosets on a mismatch, and when `fill` is set defines
  // new cosets until the word is traced completely.
  void scan(std::size_t c, const Columns& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i, j)
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1) != kUndefined) b = at(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        deductions_.push_back({f, w[i]});
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.front();
      deductions_.pop_front();
      for (const Columns& w : cycles_[col]) {
        if (!is_live(c)) break;
        scan(c, w, false);
      }
      if (!is_live(c)) continue;
      const std::size_t d = at(c, col);
      if (d == kUndefined) continue;
      for (const Columns& w : cycles_[col ^ 1]) {
        if (!is_live(d)) break;
        scan(d, w, false);
      }
    }
  }

  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const auto [keep, drop] = std::minmax(a, b);
    parent_[drop] = keep;
    --live_;
    queue.push_back(drop);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t gone = queue[i];
      for (std::size_t col = 0; col < cols_; ++col) {
        const std::size_t d = at(gone, col);
        if (d == kUndefined) continue;
        at(gone, col) = kUndefined;
        if (at(d, col ^ 1) == gone) at(d, col ^ 1) = kUndefined;
        const std::size_t mu = rep(gone);
        const std::size_t nu = rep(d);
        if (at(mu, col) != kUndefined) {
          merge(nu, at(mu, col), queue);
        } else if (at(nu, col ^ 1) != kUndefined) {
          merge(mu, at(nu, col ^ 1), queue);
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
          deductions_.push_back({mu, col});
        }
      }
    }
    gap_hint_ = 0;
  }

  // Final closure check on a complete table; returns false if it had to
  // change anything.
  bool verify_closed() {
    const std::size_t before = live_;
    const std::size_t defined = parent_.size();
    for (const Columns& w : subgroup_) scan(0, w, true);
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const Columns& r : relators_)
        if (is_live(c)) scan(c, r, true);
    return live_ == before && parent_.size() == defined && deductions_.empty();
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::vector<std::vector<Columns>> cycles_;
  std::vector<Columns> relators_;
  std::vector<Columns> subgroup_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> parent_;
  std::size_t live_ = 0;
  std::size_t gap_hint_ = 0;
  std::deque<std::pair<std::size_t, std::size_t>> deductions_;
};

// Backtracking search over partial standardized tables with at most
// `max_index` cosets, pruning tables that are not minimal in their
// conjugacy class.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, std::size_t max_index)
      : p_(p),
        cols_(2 * p.generator_count()),
        max_index_(max_index),
        cycles_(relator_cycles(p)),
        table_(max_index * cols_, kUndefined),
        mu_(max_index),
        nu_(max_index) {}

  std::vector<std::vector<std::size_t>> run() {
    active_ = 1;
    search();
    return std::move(found_);
  }

 private:
  std::size_t& at(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  void set(std::size_t c, std::size_t col, std::size_t d) {
    at(c, col) = d;
    at(d, col ^ 1) = c;
    trail_.push_back({c, col});
    pending_.push_back({c, col});
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [c, col] = trail_.back();
      trail_.pop_back();
      at(at(c, col), col ^ 1) = kUndefined;
      at(c, col) = kUndefined;
    }
  }

  void search() {
    std::size_t c = 0, col = 0;
    bool gap = false;
    for (c = 0; c < active_ && !gap; ++c)
      for (col = 0; col < cols_; ++col)
        if (at(c, col) == kUndefined) {
          gap = true;
          break;
        }
    if (!gap) {
      found_.emplace_back(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(active_ * cols_));
      return;
    }
    --c;  // loop increment ran once past the gap row

    const std::size_t limit = std::min(active_ + 1, max_index_);
    for (std::size_t target = 0; target < limit; ++target) {
      if (target < active_ && at(target, col ^ 1) != kUndefined) continue;
      const std::size_t mark = trail_.size();
      const std::size_t saved_active = active_;
      if (target == active_) ++active_;
      pending_.clear();
      set(c, col, target);
      if (propagate() && is_canonical()) search();
      undo(mark);
      active_ = saved_active;
    }
  }

  // Returns false when a relator cannot close without merging cosets.
  bool propagate() {
    while (!pending_.empty()) {
      auto [c, col] = pending_.back();
      pending_.pop_back();
      for (const Columns& w : cycles_[col])
        if (!scan(c, w)) return false;
      const std::size_t d = at(c, col);
      for (const Columns& w : cycles_[col ^ 1])
        if (!scan(d, w)) return false;
    }
    return true;
  }

  bool scan(std::size_t c, const Columns& w) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (i < j && at(f, w[i]) != kUndefined) f = at(f, w[i++]);
    if (i == j) return f == c;
    while (j > i && at(b, w[j - 1] ^ 1) != kUndefined) b = at(b, w[--j] ^ 1);
    if (j == i) return f == b;
    if (j == i + 1) set(f, w[i], b);
    return true;
  }

  // Compares the table renumbered from each other base coset against the
  // current one; any strictly smaller renumbering rules this table out.
  bool is_canonical() {
    for (std::size_t alpha = 1; alpha < active_; ++alpha) {
      std::fill(nu_.begin(), nu_.begin() + static_cast<std::ptrdiff_t>(active_), kUndefined);
      mu_[0] = alpha;
      nu_[alpha] = 0;
      std::size_t next = 1;
      bool decided = false;
      for (std::size_t i = 0; i < active_ && i < next && !decided; ++i)
        for (std::size_t col = 0; col < cols_; ++col) {
          const std::size_t gamma = at(i, col);
          const std::size_t delta = at(mu_[i], col);
          if (gamma == kUndefined || delta == kUndefined) {
            decided = true;
            break;
          }
          if (nu_[delta] == kUndefined) {
            nu_[delta] = next;
            mu_[next++] = delta;
          }
          if (nu_[delta] < gamma) return false;
          if (nu_[delta] > gamma) {
            decided = true;
            break;
          }
        }
    }
    return true;
  }

  const Presentation& p_;
  std::size_t cols_;
  std::size_t max_index_;
  std::vector<std::vector<Columns>> cycles_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> mu_, nu_;
  std::size_t active_ = 1;
  std::vector<std::pair<std::size_t, std::size_t>> trail_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::vector<std::vector<std::size_t>> found_;
};

// Schreier generators of the stabiliser of coset 0, read off the table along
// the tree of first appearances.
SubgroupSpec schreier_generators(std::size_t generator_count, std::size_t n,
                                 const std::vector<std::size_t>& rows) {
  const std::size_t cols = 2 * generator_count;
  std::vector<Word> rep(n);
  std::vector<bool> reached(n, false);
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(cols, false));
  reached[0] = true;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t col = 0; col < cols; ++col) {
      const std::size_t d = rows[c * cols + col];
      if (reached[d]) continue;
      reached[d] = true;
      const Letter l{col / 2, (col % 2 == 0) ? 1 : -1};
      rep[d] = word_product(rep[c], Word{l});
      tree[c][col] = true;
      tree[d][col ^ 1] = true;
    }
  SubgroupSpec h;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < generator_count; ++g) {
      if (tree[c][2 * g]) continue;
      const std::size_t d = rows[c * cols + 2 * g];
      Word w = word_product(word_product(rep[c], Word{gen(g)}), invert(rep[d]));
      if (!w.empty()) h.words.push_back(std::move(w));
    }
  return h;
}

}  // namespace

CosetTable::CosetTable(std::size_t generator_count, std::vector<std::size_t> action,
                       SubgroupSpec subgroup)
    : generator_count_(generator_count),
      size_(0),
      action_(std::move(action)),
      subgroup_(std::move(subgroup)) {
  const std::size_t cols = 2 * generator_count_;
  if (cols == 0) {
    if (!action_.empty()) invalid_input("coset table without generators must be empty");
    size_ = 1;
  } else {
    if (action_.empty() || action_.size() % cols != 0)
      invalid_input("coset table size is not a multiple of the column count");
    size_ = action_.size() / cols;
  }
  for (std::size_t v : action_)
    if (v >= size_) invalid_input("coset table entry out of range");
  for (const Word& w : subgroup_.words)
    if (!letters_in_range(w, generator_count_)) invalid_input("subgroup word out of range");
}

std::size_t trace(const CosetTable& t, std::size_t coset, const Word& w) {
  if (coset >= t.size()) invalid_input("trace: coset " + std::to_string(coset) + " out of range");
  if (!letters_in_range(w, t.generator_count())) invalid_input("trace: letter out of range");
  for (const Letter& l : w) coset = t.act(coset, l);
  return coset;
}

void validate_table(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count())
    invalid_input("coset table and presentation have different generator counts");
  const std::size_t cols = t.column_count();
  for (std::size_t c = 0; c < t.size(); ++c)
    for (std::size_t col = 0; col < cols; ++col)
      if (t.entry(t.entry(c, col), col ^ 1) != c)
        invalid_input("actions of a generator and its inverse are not mutually inverse at coset " +
                      std::to_string(c));
  for (std::size_t i = 0; i < p.relator_count(); ++i)
    for (std::size_t c = 0; c < t.size(); ++c)
      if (trace(t, c, p.relators()[i]) != c)
        invalid_input("relator " + std::to_string(i + 1) + " does not fix coset " +
                      std::to_string(c));
  for (const Word& w : t.subgroup().words)
    if (trace(t, 0, w) != 0) invalid_input("a subgroup word does not fix coset 0");
  if (!is_transitive(t)) invalid_input("coset table is not transitive");
  if (cols > 0) {
    const std::size_t zero = 0;
    if (standardize(t.rows(), cols, std::span(&zero, 1), t.size()) != t.rows())
      invalid_input("coset table is not numbered by first appearance");
  }
}

bool is_transitive(const CosetTable& t) {
  std::vector<bool> seen(t.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      const std::size_t d = t.entry(c, col);
      if (!seen[d]) {
        seen[d] = true;
        ++count;
        stack.push_back(d);
      }
    }
  }
  return count == t.size();
}

CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& subgroup,
                        std::size_t max_cosets) {
  if (max_cosets == 0) invalid_input("max_cosets must be positive");
  for (const Word& w : subgroup.words)
    if (!letters_in_range(w, p.generator_count())) invalid_input("subgroup word out of range");
  SubgroupSpec reduced;
  for (const Word& w : subgroup.words) reduced.words.push_back(free_reduce(w));
  if (p.generator_count() == 0) return CosetTable(0, {}, std::move(reduced));
  Enumerator e(p, reduced, max_cosets);
  return CosetTable(p.generator_count(), e.run(), std::move(reduced));
}

std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index) {
  if (max_index == 0) invalid_input("max_index must be positive");
  std::vector<CosetTable> out;
  const std::size_t g = p.generator_count();
  if (g == 0) {
    out.emplace_back(0, std::vector<std::size_t>{}, SubgroupSpec{});
    return out;
  }
  LowIndexSearch search(p, max_index);
  auto tables = search.run();
  std::sort(tables.begin(), tables.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& rows : tables) {
    const std::size_t n = rows.size() / (2 * g);
    SubgroupSpec h = schreier_generators(g, n, rows);
    out.emplace_back(g, std::move(rows), std::move(h));
  }
  return out;
}

}  // namespace fpg
