#pragma once

// Finite-sheeted covers of presentation complexes built from coset tables,
// and the subgroup presentations read off them.

#include <vector>

#include "fpg/complexes.hpp"
#include "fpg/cosets.hpp"
#include "fpg/words.hpp"

namespace fpg {

struct Covering {
  TwoComplex base;
  TwoComplex total;
  std::size_t degree = 0;
  std::vector<std::size_t> vertex_projection;
  std::vector<std::size_t> edge_projection;
  std::vector<std::size_t> face_projection;
};

/// Vertex c is the coset c; edge c*g + j runs from c to c.x_j; face c*m + i
/// is relator i lifted at vertex c. Throws InvalidInput when the table does
/// not belong to the presentation.
Covering build_cover(const Presentation& p, const CosetTable& t);

std::size_t fiber_size(const Covering& c);

/// Throws InvalidInput unless every base cell has `degree` preimages and the
/// projections commute with incidence.
void validate_covering(const Covering& c);

/// Presentation of the subgroup carried by the cover: the edge-path group of
/// the total complex over its spanning tree.
EdgePathPresentation subgroup_presentation_with_details(const Covering& c);
Presentation subgroup_presentation(const Covering& c);

/// Cheap Tietze clean-up: drops trivial relators, removes duplicates up to
/// rotation and inversion, and eliminates generators that occur exactly once
/// in some relator.
Presentation simplify(const Presentation& p);

}  // namespace fpg
