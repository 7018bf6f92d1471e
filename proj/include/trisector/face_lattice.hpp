#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "trisector/triangulation.hpp"

namespace trisector {

// The identified faces of a triangulation in dimensions 0..3.  A
// k-face of a pentachoron is a set of k+1 corners, stored as a 5-bit
// mask; two faces are in one class when some chain of facet gluings
// maps one corner set onto the other.  (4-faces are the pentachora
// themselves and need no quotient.)
class FaceLattice {
public:
    struct Face {
        // All (pentachoron, corner mask) flags in the class, sorted.
        std::vector<std::pair<int32_t, uint8_t>> incidences;
    };

    int pentachora() const { return n_; }

    int count(int dim) const { return static_cast<int>(classes_[dim].size()); }

    const Face& face(int dim, int id) const { return classes_[dim][id]; }

    // Class of the face of `pent` spanned by the corners in `mask`
    // (popcount(mask) == dim + 1).
    int class_of(int dim, int pent, uint8_t mask) const {
        return class_of_[dim][static_cast<std::size_t>(pent) * combos(dim) +
                              combo_index(dim, mask)];
    }

    int vertex_class(int pent, int corner) const {
        return class_of(0, pent, static_cast<uint8_t>(1u << corner));
    }

    int tetrahedron_class(int pent, int facet) const {
        return class_of(3, pent, static_cast<uint8_t>(0x1f ^ (1u << facet)));
    }

    // (f0, f1, f2, f3, f4)
    std::array<long, 5> f_vector() const {
        return {count(0), count(1), count(2), count(3), n_};
    }

    long euler_characteristic() const {
        const auto f = f_vector();
        return f[0] - f[1] + f[2] - f[3] + f[4];
    }

    // Number of corner masks per dimension: 5, 10, 10, 5.
    static int combos(int dim) { return dim == 1 || dim == 2 ? 10 : 5; }

    // Position of `mask` in the ascending enumeration of masks with
    // popcount dim+1.
    static int combo_index(int dim, uint8_t mask);
    static uint8_t combo_mask(int dim, int index);

private:
    friend FaceLattice build_face_lattice(const Triangulation&);

    int n_ = 0;
    std::array<std::vector<Face>, 4> classes_;
    std::array<std::vector<int32_t>, 4> class_of_;
};

FaceLattice build_face_lattice(const Triangulation& t);

}  // namespace trisector
