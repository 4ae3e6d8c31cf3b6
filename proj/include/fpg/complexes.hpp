#pragma once

// Combinatorial CW 2-complexes: vertices, directed edges, and faces attached
// along closed edge loops.

#include <optional>
#include <string>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct LoopStep {
  std::size_t edge = 0;
  int direction = 1;  // +1 runs tail -> head, -1 runs head -> tail

  friend bool operator==(const LoopStep&, const LoopStep&) = default;
};

struct AttachingLoop {
  std::vector<LoopStep> steps;

  friend bool operator==(const AttachingLoop&, const AttachingLoop&) = default;
};

class TwoComplex {
 public:
  /// Throws InvalidInput unless vertex_count >= 1, all ids are in range and
  /// every face loop is a nonempty closed chain of edges. `edge_labels` is
  /// either empty or one label per edge; labels name generators of edge-path
  /// presentations.
  TwoComplex(std::size_t vertex_count, std::vector<Edge> edges, std::vector<AttachingLoop> faces,
             std::vector<std::string> edge_labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<AttachingLoop>& faces() const { return faces_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const AttachingLoop& face(std::size_t f) const { return faces_[f]; }

  /// Label of edge e, or "e<id>" when the complex carries no labels.
  std::string edge_label(std::size_t e) const;
  const std::vector<std::string>& edge_labels() const { return labels_; }

  /// Start vertex of a step, honouring its direction.
  std::size_t step_source(const LoopStep& s) const;
  std::size_t step_target(const LoopStep& s) const;

  friend bool operator==(const TwoComplex&, const TwoComplex&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<AttachingLoop> faces_;
  std::vector<std::string> labels_;
};

/// One vertex, a loop edge per generator, a face spelling each relator.
TwoComplex presentation_complex(const Presentation& p);

struct SpanningTree {
  std::vector<bool> in_tree;               // indexed by edge id
  std::vector<std::size_t> tree_edges;     // ascending edge ids
  std::vector<std::optional<std::size_t>> parent_edge;  // per vertex; root has none
  std::vector<std::size_t> visit_order;    // vertices in discovery order

  bool contains(std::size_t e) const { return in_tree[e]; }
};

/// Deterministic spanning tree rooted at vertex 0. The search is breadth
/// first along edge directions (tail to head, edges in id order); an edge is
/// used against its direction only once the forward search has stalled.
/// Throws Disconnected when some vertex is unreachable.
SpanningTree spanning_tree(const TwoComplex& k);

/// Throws InvalidInput unless `t` is a spanning tree of `k`.
void validate_spanning_tree(const TwoComplex& k, const SpanningTree& t);

struct EdgePathPresentation {
  Presentation presentation;
  std::vector<std::size_t> generator_edges;  // edge id behind each generator
  std::size_t dropped_relators = 0;          // faces whose boundary became trivial
};

/// Generators are the non-tree edges, relators the face boundaries with tree
/// edges deleted, freely and cyclically reduced.
EdgePathPresentation edge_path_presentation(const TwoComplex& k, const SpanningTree& t);

long euler_characteristic(const TwoComplex& k);

/// Identifies vertex 0 of both complexes.
TwoComplex wedge(const TwoComplex& k1, const TwoComplex& k2);

/// Cells of dimension <= 2 of the product CW structure.
TwoComplex product_2skeleton(const TwoComplex& k1, const TwoComplex& k2);

/// Number of connected components of the 1-skeleton.
std::size_t component_count(const TwoComplex& k);

}  // namespace fpg
