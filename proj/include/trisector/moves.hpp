#pragma once

#include <utility>
#include <vector>

#include "trisector/face_lattice.hpp"
#include "trisector/trisect.hpp"
#include "trisector/triangulation.hpp"

namespace trisector {

// A place where a 2-4 move applies: an interior tetrahedron whose two
// sides lie in distinct pentachora.
struct MoveSite {
    int tet_class = -1;           // face-lattice id, for bookkeeping
    int pent_a = -1, facet_a = -1;  // one side
    int pent_b = -1, facet_b = -1;  // the other
};

std::vector<MoveSite> two_four_move_sites(const Triangulation& t,
                                          const FaceLattice& lat);

// The rebuilt triangulation after a 2-4 move, with a witness for every
// corner of every new pentachoron: corner_origin[p][v] is a
// (pentachoron, corner) of the old triangulation lying in the same
// vertex class.  The two replaced pentachora are removed (indices
// shift down) and the four new ones are appended.
struct MoveResult {
    Triangulation tri;
    std::vector<std::array<std::pair<int32_t, uint8_t>, 5>> corner_origin;
};

// Replaces the two pentachora of `site` by four arranged around a new
// edge joining the two apexes (the corners opposite the shared
// tetrahedron).  The f-vector changes by (0, +1, +4, +5, +2); Euler
// characteristic and homology are untouched.
MoveResult apply_two_four_move(const Triangulation& t, const MoveSite& site);

// Effect of the move on a valid tricolouring (vertex classes are
// unchanged, so the colouring transfers verbatim):
//  - extends_spine: the shared tetrahedron is bicoloured; the new edge
//    is monochromatic and one vertex spine graph gains an edge.
//  - preserves_spines: tricoloured tetrahedron, apexes of different
//    colours; all three spine graphs are unchanged.
//  - breaks_colouring: tricoloured tetrahedron, apexes of the same
//    colour; the transferred colouring is no longer valid.
enum class MoveKind { extends_spine, preserves_spines, breaks_colouring };

MoveKind classify_move(const FaceLattice& lat, const Tricolouring& c,
                       const MoveSite& site);

}  // namespace trisector
