#include "trisector/homology.hpp"

#include <stdexcept>

namespace trisector {

int Z2Matrix::rank() const {
    std::vector<uint64_t> m = data_;
    const int w = words_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        const int word = c / 64;
        const uint64_t bit = 1ull << (c % 64);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r) {
            if (m[static_cast<std::size_t>(r) * w + word] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int k = 0; k < w; ++k)
            std::swap(m[static_cast<std::size_t>(rank) * w + k],
                      m[static_cast<std::size_t>(pivot) * w + k]);
        for (int r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            if (m[static_cast<std::size_t>(r) * w + word] & bit)
                for (int k = 0; k < w; ++k)
                    m[static_cast<std::size_t>(r) * w + k] ^=
                        m[static_cast<std::size_t>(rank) * w + k];
        }
        ++rank;
    }
    return rank;
}

std::array<Z2Matrix, 4> boundary_matrices_z2(const FaceLattice& lat) {
    std::array<Z2Matrix, 4> d = {
        Z2Matrix(lat.count(0), lat.count(1)),
        Z2Matrix(lat.count(1), lat.count(2)),
        Z2Matrix(lat.count(2), lat.count(3)),
        Z2Matrix(lat.count(3), lat.pentachora()),
    };
    for (int k = 1; k <= 4; ++k) {
        Z2Matrix& m = d[k - 1];
        const int cols = k == 4 ? lat.pentachora() : lat.count(k);
        for (int id = 0; id < cols; ++id) {
            int pent;
            uint8_t mask;
            if (k == 4) {
                pent = id;
                mask = 0x1f;
            } else {
                const auto& rep = lat.face(k, id).incidences.front();
                pent = rep.first;
                mask = rep.second;
            }
            for (int v = 0; v < 5; ++v) {
                if (!(mask & (1u << v))) continue;
                const uint8_t sub = static_cast<uint8_t>(mask ^ (1u << v));
                m.flip(lat.class_of(k - 1, pent, sub), id);
            }
        }
    }
    return d;
}

std::array<long, 5> betti_z2(const FaceLattice& lat) {
    for (int id = 0; id < lat.count(3); ++id)
        if (lat.face(3, id).incidences.size() != 2)
            throw std::invalid_argument("betti_z2: triangulation is not closed");
    const auto f = lat.f_vector();
    const auto d = boundary_matrices_z2(lat);
    const long r1 = d[0].rank(), r2 = d[1].rank(), r3 = d[2].rank(),
               r4 = d[3].rank();
    return {f[0] - r1, f[1] - r1 - r2, f[2] - r2 - r3, f[3] - r3 - r4,
            f[4] - r4};
}

long trisection_genus_lower_bound(const Triangulation& t,
                                  const FaceLattice& lat) {
    if (!t.is_closed() || !t.is_connected())
        throw std::invalid_argument(
            "trisection_genus_lower_bound: need a closed connected "
            "triangulation");
    const auto b = betti_z2(lat);
    const long sum = b[1] + b[2];
    return is_orientable(t) ? sum : 2 * sum;
}

}  // namespace trisector
