#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trisector/face_lattice.hpp"

namespace trisector {

// Dense matrix over GF(2), rows packed into 64-bit words.
class Z2Matrix {
public:
    Z2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void flip(int r, int c) {
        data_[static_cast<std::size_t>(r) * words_ + c / 64] ^= 1ull << (c % 64);
    }

    bool at(int r, int c) const {
        return (data_[static_cast<std::size_t>(r) * words_ + c / 64] >>
                (c % 64)) & 1u;
    }

    // Rank over GF(2) (works on a copy).
    int rank() const;

private:
    int rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

// Mod-2 boundary maps of the face quotient complex; result[k-1] is the
// matrix of d_k : C_k -> C_{k-1} for k = 1..4, with one column per
// k-class and one row per (k-1)-class.  Entries count, mod 2, how many
// of the k+1 facets of a representative land in each class; the count
// is independent of the representative.
std::array<Z2Matrix, 4> boundary_matrices_z2(const FaceLattice& lat);

// Z2 Betti numbers (b0..b4) of the quotient complex.
// Pre: the triangulation behind `lat` is closed.
std::array<long, 5> betti_z2(const FaceLattice& lat);

// Lower bound for the genus of any trisection supported by a closed
// connected triangulation of the complex: b1 + b2 if orientable,
// doubled if not (crosscap counting).
long trisection_genus_lower_bound(const Triangulation& t,
                                  const FaceLattice& lat);

}  // namespace trisector
