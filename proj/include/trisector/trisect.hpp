#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trisector/face_lattice.hpp"
#include "trisector/homology.hpp"

namespace trisector {

// A partition of the vertex classes into three non-empty colour
// groups, one colour per vertex class.  Only partitions where every
// pentachoron sees the corner pattern (2,2,1) and no triangle class is
// monochromatic are "valid tricolourings".
struct Tricolouring {
    std::vector<uint8_t> colour;  // per vertex class, values 0..2
};

struct PreliminaryResult {
    bool pass = false;
    std::string reason;
};

// Cheap necessary conditions: at least three vertex classes, and no
// triangle class with all three corners at one vertex class.
PreliminaryResult preliminary_checks(const FaceLattice& lat);

bool is_valid_tricolouring(const FaceLattice& lat, const Tricolouring& c);

// All valid tricolourings, one representative per unordered partition
// (colours are emitted in restricted-growth order).  Runs over all
// 3-part partitions of the vertex classes, so it is exponential in the
// vertex count; intended for the small-vertex range this tool targets.
std::vector<Tricolouring> enumerate_tricolourings(const FaceLattice& lat);

// The graph with one node per vertex class of one colour and one edge
// per monochromatic edge class of that colour (loops and parallel
// edges count separately).
struct SpineGraph {
    long vertices = 0;
    long edges = 0;
    long components = 0;

    bool connected() const { return components == 1; }
    long cycle_rank() const { return edges - vertices + components; }
};

std::array<SpineGraph, 3> vertex_spine_graphs(const FaceLattice& lat,
                                              const Tricolouring& c);

// Valid tricolouring whose three vertex spine graphs are connected.
bool is_c_tricolouring(const FaceLattice& lat, const Tricolouring& c);

// The square-cell complex dual to one colour pair {x, y} (the pair not
// containing `excluded`): 0-cells are xy edge classes, 1-cells are
// bicoloured triangle classes (each with two 0-cell ends), 2-cells are
// xxyy tetrahedron classes (squares, whose four sides are 1-cells
// counted with multiplicity).
struct CubicalSpine {
    std::vector<int> cells0;  // edge class ids
    std::vector<int> cells1;  // triangle class ids
    std::vector<int> cells2;  // tetrahedron class ids
    std::vector<std::array<int, 2>> ends;   // per 1-cell, 0-cell indices
    std::vector<std::array<int, 4>> sides;  // per 2-cell, 1-cell indices
    bool connected = false;                 // of the whole incidence diagram
};

CubicalSpine pair_spine_complex(const FaceLattice& lat, const Tricolouring& c,
                                int excluded);

// Repeatedly removes a (1-cell, 2-cell) free pair, where the 1-cell
// lies in exactly one surviving square side (multiplicity counted).
// The verdict and the surviving cycle rank are independent of the
// order in which free pairs are picked; `shuffle` randomises the order
// for testing exactly that.
struct CollapseResult {
    bool collapsed = false;    // no 2-cells left
    long surviving_edges = 0;  // 1-cells left
    long components = 0;       // of the surviving graph
    long cycle_rank = 0;
};

CollapseResult greedy_collapse(const CubicalSpine& spine,
                               std::mt19937* shuffle = nullptr);

// The closed surface made of one square per pentachoron, glued along
// the tricoloured tetrahedra.
struct CentralSurface {
    long vertices = 0;  // tricoloured triangle classes
    long edges = 0;     // tricoloured tetrahedron classes
    long faces = 0;     // pentachora
    long chi = 0;
    bool connected = false;
    bool orientable = false;
    long genus = 0;  // handle genus if orientable, crosscap number if not
};

CentralSurface central_surface(const Triangulation& t, const FaceLattice& lat,
                               const Tricolouring& c);

// How far a tricolouring gets along the verification pipeline.
enum class Level { invalid, tricolouring, c_tricolouring, ts_tricolouring };

// Trisection type (g; g0, g1, g2) with g0 >= g1 >= g2, ordered by
// surface genus first.
struct TrisectionType {
    long genus = 0;
    std::array<long, 3> handlebody_genera{0, 0, 0};

    auto operator<=>(const TrisectionType&) const = default;
    std::string str() const;
};

struct TrisectionReport {
    Level level = Level::invalid;
    std::string failure;  // empty when level == ts_tricolouring
    std::optional<TrisectionType> type;
    bool surface_orientable = false;
    bool minimal = false;  // genus meets the homology bound, or all gi = 0
};

// Runs the full pipeline for one tricolouring.  Inconsistencies
// between lattice, spines and surface (which indicate a bug, not a
// data condition) throw std::logic_error.
TrisectionReport analyze_tricolouring(const Triangulation& t,
                                      const FaceLattice& lat,
                                      const Tricolouring& c,
                                      bool manifold_orientable,
                                      long lower_bound);

struct TriangulationAnalysis {
    PreliminaryResult preliminary;
    bool orientable = false;
    std::array<long, 5> betti{};
    long lower_bound = 0;
    long n_tc = 0, n_c = 0, n_ts = 0;
    std::map<TrisectionType, long> ts_types;  // with multiplicity
    bool minimal = false;                     // some ts type is minimal
    std::vector<Tricolouring> tricolourings;
    std::vector<TrisectionReport> reports;  // aligned with tricolourings
};

// Pre: t closed and connected (throws std::invalid_argument otherwise).
TriangulationAnalysis analyze_triangulation(const Triangulation& t,
                                            const FaceLattice& lat);

}  // namespace trisector
