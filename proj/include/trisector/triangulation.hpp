#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trisector/perm5.hpp"

namespace trisector {

// One side of a facet pairing.  `pent < 0` marks a boundary facet.
// For a glued facet f of pentachoron p, `map` sends all five vertex
// labels of p to labels of `pent`, and map(f) is the matching facet.
struct Gluing {
    int32_t pent = -1;
    Perm5 map;

    bool boundary() const { return pent < 0; }
    friend bool operator==(const Gluing&, const Gluing&) = default;
};

// A (possibly singular) triangulation of a 4-manifold: n pentachora
// with facet identifications.  The gluing table is involutive by
// construction: join() records both sides at once.
class Triangulation {
public:
    explicit Triangulation(int n) : glue_(n) {
        if (n < 0) throw std::invalid_argument("negative triangulation size");
    }

    int size() const { return static_cast<int>(glue_.size()); }

    const Gluing& adjacent(int pent, int facet) const {
        return glue_[pent][facet];
    }

    bool is_glued(int pent, int facet) const {
        return !glue_[pent][facet].boundary();
    }

    // Glues facet `facet` of `pent` to pentachoron `dest` via `map`.
    // Throws if either side is already glued, or if the gluing would
    // identify a facet with itself.
    void join(int pent, int facet, int dest, const Perm5& map);

    int boundary_facet_count() const;
    bool is_closed() const { return boundary_facet_count() == 0; }
    bool is_connected() const;

    // Checks the involution and no-self-facet invariants; throws
    // std::logic_error on violation.  Cheap; used after bulk table
    // construction.
    void validate() const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::vector<std::array<Gluing, 5>> glue_;
};

// Whether a consistent orientation (sign per pentachoron) exists: a
// gluing with even permutation must join opposite signs, odd joins
// equal signs.  Pre: at least one pentachoron.  Works componentwise.
bool is_orientable(const Triangulation& t);

}  // namespace trisector
