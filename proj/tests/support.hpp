#pragma once

// Shared fixtures for the unit and acceptance suites: a corpus of small
// presentations and seeded generators for random words, presentations,
// complexes and matrices.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fpg/complexes.hpp"
#include "fpg/homology.hpp"
#include "fpg/text.hpp"
#include "fpg/words.hpp"

namespace fpg::testing {

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

inline Word word(const std::string& text, const Presentation& p) {
  return parse_word(text, p.generator_names());
}

inline AbelianGroup group(std::size_t free_rank, std::vector<long> torsion = {}) {
  std::vector<Integer> t(torsion.begin(), torsion.end());
  return AbelianGroup{free_rank, t};
}

struct NamedPresentation {
  std::string name;
  std::string text;
};

// Every entry has at most 3 generators and 3 relators.
inline const std::vector<NamedPresentation>& corpus() {
  static const std::vector<NamedPresentation> items = {
      {"Z", "<a | >"},
      {"Z2", "<a | a^2>"},
      {"Z3", "<a | a^3>"},
      {"Z5", "<a | a^5>"},
      {"Z6", "<a | a^6>"},
      {"F2", "<a, b | >"},
      {"Z^2", "<a, b | [a,b]>"},
      {"Z2xZ2", "<a, b | a^2, b^2, [a,b]>"},
      {"S3", "<a, b | a^2, b^2, (ab)^3>"},
      {"S3'", "<r, s | r^3, s^2, srsr>"},
      {"D4", "<a, b | a^4, b^2, (ab)^2>"},
      {"Q8", "<a, b | a^4, a^2 b^-2, abab^-1>"},
      {"A4", "<a, b | a^3, b^3, (ab)^2>"},
      {"trefoil", "<a, b | a^2 b^-3>"},
      {"Z2*Z3", "<a, b | a^2, b^3>"},
      {"klein bottle", "<a, b | abab^-1>"},
      {"F3", "<a, b, c | >"},
      {"Z^3", "<a, b, c | [a,b], [b,c], [a,c]>"},
      {"Z2*Z2*Z2", "<a, b, c | a^2, b^2, c^2>"},
      {"infinite dihedral", "<a, b | a^2, b^2>"},
      {"BS(1,2)", "<a, b | b a b^-1 a^-2>"},
      {"one-relator F2", "<a, b, c | abc>"},
      {"A5", "<x, y | x^2, y^3, (xy)^5>"},
      {"triangle 333", "<a, b | a^3, b^3, (ab)^3>"},
      {"Z4xZ2", "<a, b | a^4, b^2, [a,b]>"},
  };
  return items;
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(range(0, static_cast<long>(n) - 1)); }
  bool coin() { return range(0, 1) == 1; }

  Word word(std::size_t generator_count, std::size_t max_length) {
    Word w;
    const std::size_t length = below(max_length + 1);
    for (std::size_t i = 0; i < length; ++i)
      w.letters.push_back(gen(below(generator_count), coin() ? 1 : -1));
    return w;
  }

  Presentation presentation(std::size_t max_generators, std::size_t max_relators,
                            std::size_t max_length) {
    const std::size_t g = 1 + below(max_generators);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Word> relators;
    const std::size_t m = below(max_relators + 1);
    while (relators.size() < m) {
      Word r = cyclic_reduce(word(g, max_length));
      if (!r.empty()) relators.push_back(std::move(r));
    }
    return Presentation(std::move(names), std::move(relators));
  }

  // Connected complex: a random tree plus extra edges (loops allowed) and
  // faces spelled by closed walks.
  TwoComplex connected_complex(std::size_t max_vertices, std::size_t max_extra_edges,
                               std::size_t max_faces) {
    const std::size_t v = 1 + below(max_vertices);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < v; ++i) {
      const std::size_t other = below(i);
      edges.push_back(coin() ? Edge{other, i} : Edge{i, other});
    }
    const std::size_t extra = below(max_extra_edges + 1);
    for (std::size_t i = 0; i < extra; ++i) edges.push_back(Edge{below(v), below(v)});
    // Shuffle edge ids so tree edges are not always first.
    std::shuffle(edges.begin(), edges.end(), rng_);

    std::vector<AttachingLoop> faces;
    if (!edges.empty()) {
      const std::size_t f = below(max_faces + 1);
      for (std::size_t i = 0; i < f; ++i) faces.push_back(closed_walk(v, edges));
    }
    return TwoComplex(v, std::move(edges), std::move(faces));
  }

  IntMatrix matrix(std::size_t max_rows, std::size_t max_cols, long bound) {
    const std::size_t r = below(max_rows + 1), c = below(max_cols + 1);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = range(-bound, bound);
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  // Random walk from a vertex, closed up along a shortest path back to it.
  AttachingLoop closed_walk(std::size_t v, const std::vector<Edge>& edges) {
    std::vector<std::vector<LoopStep>> out(v);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      out[edges[e].tail].push_back({e, 1});
      out[edges[e].head].push_back({e, -1});
    }
    auto target = [&](const LoopStep& s) { return s.direction > 0 ? edges[s.edge].head : edges[s.edge].tail; };
    std::size_t start = below(v);
    while (out[start].empty()) start = below(v);
    AttachingLoop loop;
    std::size_t at = start;
    const std::size_t length = 1 + below(5);
    for (std::size_t i = 0; i < length; ++i) {
      const LoopStep s = out[at][below(out[at].size())];
      loop.steps.push_back(s);
      at = target(s);
    }
    // BFS back to start.
    std::vector<std::optional<LoopStep>> via(v);
    std::vector<bool> seen(v, false);
    std::vector<std::size_t> queue{at};
    seen[at] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const LoopStep& s : out[queue[qi]])
        if (!seen[target(s)]) {
          seen[target(s)] = true;
          via[target(s)] = s;
          queue.push_back(target(s));
        }
    std::vector<LoopStep> back;
    for (std::size_t x = start; x != at;) {
      const LoopStep s = *via[x];
      back.push_back(s);
      x = s.direction > 0 ? edges[s.edge].tail : edges[s.edge].head;
    }
    loop.steps.insert(loop.steps.end(), back.rbegin(), back.rend());
    return loop;
  }

  std::mt19937 rng_;
};

}  // namespace fpg::testing
