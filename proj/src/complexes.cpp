#include "fpg/complexes.hpp"

#include <deque>
#include <numeric>

#include "fpg/error.hpp"

namespace fpg {

TwoComplex::TwoComplex(std::size_t vertex_count, std::vector<Edge> edges,
                       std::vector<AttachingLoop> faces, std::vector<std::string> edge_labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      labels_(std::move(edge_labels)) {
  if (vertex_count_ == 0) invalid_input("a complex needs at least one vertex");
  for (const Edge& e : edges_)
    if (e.tail >= vertex_count_ || e.head >= vertex_count_)
      invalid_input("edge endpoint out of range");
  if (!labels_.empty() && labels_.size() != edges_.size())
    invalid_input("edge label count does not match edge count");
  for (const std::string& l : labels_)
    if (!is_identifier(l)) invalid_input("edge label '" + l + "' is not an identifier");
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& steps = faces_[f].steps;
    if (steps.empty()) invalid_input("face " + std::to_string(f) + " has an empty attaching loop");
    for (const LoopStep& s : steps)
      if (s.edge >= edges_.size() || (s.direction != 1 && s.direction != -1))
        invalid_input("face " + std::to_string(f) + " refers to a bad edge step");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const LoopStep& next = steps[(i + 1) % steps.size()];
      if (step_target(steps[i]) != step_source(next))
        invalid_input("attaching loop of face " + std::to_string(f) + " is not closed");
    }
  }
}

std::string TwoComplex::edge_label(std::size_t e) const {
  return labels_.empty() ? "e" + std::to_string(e) : labels_[e];
}

std::size_t TwoComplex::step_source(const LoopStep& s) const {
  return s.direction > 0 ? edges_[s.edge].tail : edges_[s.edge].head;
}

std::size_t TwoComplex::step_target(const LoopStep& s) const {
  return s.direction > 0 ? edges_[s.edge].head : edges_[s.edge].tail;
}

TwoComplex presentation_complex(const Presentation& p) {
  std::vector<Edge> edges(p.generator_count(), Edge{0, 0});
  std::vector<AttachingLoop> faces;
  faces.reserve(p.relator_count());
  for (const Word& r : p.relators()) {
    AttachingLoop loop;
    for (const Letter& l : r) loop.steps.push_back({l.generator, l.sign});
    faces.push_back(std::move(loop));
  }
  return TwoComplex(1, std::move(edges), std::move(faces), p.generator_names());
}

SpanningTree spanning_tree(const TwoComplex& k) {
  const std::size_t n = k.vertex_count();
  std::vector<std::vector<std::size_t>> outgoing(n), incoming(n);
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    outgoing[k.edge(e).tail].push_back(e);
    incoming[k.edge(e).head].push_back(e);
  }

  SpanningTree t;
  t.in_tree.assign(k.edge_count(), false);
  t.parent_edge.assign(n, std::nullopt);
  std::vector<bool> seen(n, false);
  auto discover = [&](std::size_t v, std::size_t via, std::deque<std::size_t>& queue) {
    seen[v] = true;
    t.parent_edge[v] = via;
    t.in_tree[via] = true;
    t.visit_order.push_back(v);
    queue.push_back(v);
  };

  std::deque<std::size_t> forward{0};
  std::deque<std::size_t> backward;
  seen[0] = true;
  t.visit_order.push_back(0);
  for (;;) {
    while (!forward.empty()) {
      const std::size_t u = forward.front();
      forward.pop_front();
      for (std::size_t e : outgoing[u])
        if (!seen[k.edge(e).head]) discover(k.edge(e).head, e, forward);
      backward.push_back(u);
    }
    if (backward.empty()) break;
    const std::size_t u = backward.front();
    backward.pop_front();
    for (std::size_t e : incoming[u])
      if (!seen[k.edge(e).tail]) discover(k.edge(e).tail, e, forward);
  }

  if (t.visit_order.size() != n)
    throw Error(ErrorKind::Disconnected, "complex is disconnected: " +
                                             std::to_string(n - t.visit_order.size()) +
                                             " vertices unreachable from vertex 0");
  for (std::size_t e = 0; e < k.edge_count(); ++e)
    if (t.in_tree[e]) t.tree_edges.push_back(e);
  return t;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

void validate_spanning_tree(const TwoComplex& k, const SpanningTree& t) {
  if (t.in_tree.size() != k.edge_count()) invalid_input("spanning tree edge mask has wrong size");
  if (t.tree_edges.size() != k.vertex_count() - 1)
    invalid_input("spanning tree must have vertex_count - 1 edges");
  DisjointSets sets(k.vertex_count());
  for (std::size_t e : t.tree_edges) {
    if (e >= k.edge_count() || !t.in_tree[e]) invalid_input("spanning tree edge list is inconsistent");
    if (!sets.unite(k.edge(e).tail, k.edge(e).head)) invalid_input("spanning tree has a cycle");
  }
  std::size_t marked = 0;
  for (bool b : t.in_tree) marked += b ? 1 : 0;
  if (marked != t.tree_edges.size()) invalid_input("spanning tree edge list is inconsistent");
}

EdgePathPresentation edge_path_presentation(const TwoComplex& k, const SpanningTree& t) {
  validate_spanning_tree(k, t);
  EdgePathPresentation out;
  std::vector<std::size_t> generator_of(k.edge_count(), 0);
  std::vector<std::string> names;
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    if (t.contains(e)) continue;
    generator_of[e] = out.generator_edges.size();
    out.generator_edges.push_back(e);
    names.push_back(k.edge_label(e));
  }
  names = disambiguate_names({}, names);

  std::vector<Word> relators;
  for (const AttachingLoop& loop : k.faces()) {
    Word w;
    for (const LoopStep& s : loop.steps)
      if (!t.contains(s.edge)) w.letters.push_back({generator_of[s.edge], s.direction});
    w = cyclic_reduce(w);
    if (w.empty())
      ++out.dropped_relators;
    else
      relators.push_back(std::move(w));
  }
  out.presentation = Presentation(std::move(names), std::move(relators));
  return out;
}

long euler_characteristic(const TwoComplex& k) {
  return static_cast<long>(k.vertex_count()) - static_cast<long>(k.edge_count()) +
         static_cast<long>(k.face_count());
}

namespace {

std::vector<std::string> all_labels(const TwoComplex& k) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < k.edge_count(); ++e) out.push_back(k.edge_label(e));
  return out;
}

}  // namespace

TwoComplex wedge(const TwoComplex& k1, const TwoComplex& k2) {
  const std::size_t v1 = k1.vertex_count();
  const std::size_t e1 = k1.edge_count();
  auto vertex2 = [&](std::size_t v) { return v == 0 ? 0 : v1 + v - 1; };

  std::vector<Edge> edges = k1.edges();
  for (const Edge& e : k2.edges()) edges.push_back({vertex2(e.tail), vertex2(e.head)});
  std::vector<AttachingLoop> faces = k1.faces();
  for (AttachingLoop loop : k2.faces()) {
    for (LoopStep& s : loop.steps) s.edge += e1;
    faces.push_back(std::move(loop));
  }

  std::vector<std::string> labels;
  if (!k1.edge_labels().empty() || !k2.edge_labels().empty()) {
    labels = all_labels(k1);
    auto second = disambiguate_names(labels, all_labels(k2));
    labels.insert(labels.end(), second.begin(), second.end());
  }
  return TwoComplex(v1 + k2.vertex_count() - 1, std::move(edges), std::move(faces),
                    std::move(labels));
}

TwoComplex product_2skeleton(const TwoComplex& k1, const TwoComplex& k2) {
  const std::size_t nv1 = k1.vertex_count(), nv2 = k2.vertex_count();
  const std::size_t ne1 = k1.edge_count(), ne2 = k2.edge_count();
  auto vertex = [&](std::size_t a, std::size_t b) { return a * nv2 + b; };
  // (edge of k1) x (vertex of k2), then (vertex of k1) x (edge of k2).
  auto edge_a = [&](std::size_t e, std::size_t v) { return e * nv2 + v; };
  auto edge_b = [&](std::size_t v, std::size_t e) { return ne1 * nv2 + v * ne2 + e; };

  std::vector<Edge> edges;
  edges.reserve(ne1 * nv2 + nv1 * ne2);
  for (std::size_t e = 0; e < ne1; ++e)
    for (std::size_t v = 0; v < nv2; ++v)
      edges.push_back({vertex(k1.edge(e).tail, v), vertex(k1.edge(e).head, v)});
  for (std::size_t v = 0; v < nv1; ++v)
    for (std::size_t e = 0; e < ne2; ++e)
      edges.push_back({vertex(v, k2.edge(e).tail), vertex(v, k2.edge(e).head)});

  std::vector<AttachingLoop> faces;
  for (const AttachingLoop& loop : k1.faces())
    for (std::size_t v = 0; v < nv2; ++v) {
      AttachingLoop slice;
      for (const LoopStep& s : loop.steps) slice.steps.push_back({edge_a(s.edge, v), s.direction});
      faces.push_back(std::move(slice));
    }
  for (std::size_t a = 0; a < ne1; ++a)
    for (std::size_t b = 0; b < ne2; ++b) {
      const Edge& ea = k1.edge(a);
      const Edge& eb = k2.edge(b);
      faces.push_back(AttachingLoop{{{edge_a(a, eb.tail), 1},
                                     {edge_b(ea.head, b), 1},
                                     {edge_a(a, eb.head), -1},
                                     {edge_b(ea.tail, b), -1}}});
    }
  for (std::size_t v = 0; v < nv1; ++v)
    for (const AttachingLoop& loop : k2.faces()) {
      AttachingLoop slice;
      for (const LoopStep& s : loop.steps) slice.steps.push_back({edge_b(v, s.edge), s.direction});
      faces.push_back(std::move(slice));
    }

  std::vector<std::string> labels;
  if (!k1.edge_labels().empty() || !k2.edge_labels().empty()) {
    for (std::size_t e = 0; e < ne1; ++e)
      for (std::size_t v = 0; v < nv2; ++v)
        labels.push_back(nv2 == 1 ? k1.edge_label(e) : k1.edge_label(e) + "_" + std::to_string(v));
    std::vector<std::string> second;
    for (std::size_t v = 0; v < nv1; ++v)
      for (std::size_t e = 0; e < ne2; ++e)
        second.push_back(nv1 == 1 ? k2.edge_label(e) : k2.edge_label(e) + "_" + std::to_string(v));
    labels = disambiguate_names({}, labels);
    second = disambiguate_names(labels, second);
    labels.insert(labels.end(), second.begin(), second.end());
  }
  return TwoComplex(nv1 * nv2, std::move(edges), std::move(faces), std::move(labels));
}

std::size_t component_count(const TwoComplex& k) {
  DisjointSets sets(k.vertex_count());
  std::size_t components = k.vertex_count();
  for (const Edge& e : k.edges())
    if (sets.unite(e.tail, e.head)) --components;
  return components;
}

}  // namespace fpg
