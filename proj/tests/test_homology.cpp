#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "corpus.hpp"
#include "trisector/face_lattice.hpp"
#include "trisector/homology.hpp"
#include "trisector/isosig.hpp"

using namespace trisector;

namespace {

FaceLattice lattice(const char* sig) {
    return build_face_lattice(decode_isosig(sig));
}

// Independent rank oracle: insert columns into a growing row-echelon
// basis, counting the ones that are independent.
long basis_rank(const Z2Matrix& m) {
    std::vector<std::vector<bool>> basis;  // reduced pivot rows
    long rank = 0;
    for (long c = 0; c < m.cols(); ++c) {
        std::vector<bool> v(m.rows());
        for (long r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
        for (const auto& b : basis) {
            long pivot = -1;
            for (long r = 0; r < m.rows(); ++r)
                if (b[r]) {
                    pivot = r;
                    break;
                }
            if (pivot >= 0 && v[pivot])
                for (long r = 0; r < m.rows(); ++r) v[r] = v[r] ^ b[r];
        }
        bool zero = true;
        for (long r = 0; r < m.rows(); ++r) zero = zero && !v[r];
        if (!zero) {
            basis.push_back(v);
            ++rank;
        }
    }
    return rank;
}

}  // namespace

TEST_CASE("betti numbers of the named manifolds", "[homology]") {
    using A = std::array<long, 5>;
    CHECK(betti_z2(lattice(corpus::kOrientable[2])) == A{1, 0, 0, 0, 1});
    CHECK(betti_z2(lattice(corpus::kOrientable[0])) == A{1, 1, 0, 1, 1});
    CHECK(betti_z2(lattice(corpus::kNonOrientable[0])) == A{1, 1, 1, 1, 1});
    CHECK(betti_z2(lattice(corpus::kNonOrientable[1])) == A{1, 1, 0, 1, 1});
    CHECK(betti_z2(lattice(corpus::kCP2)) == A{1, 0, 1, 0, 1});
    CHECK(betti_z2(lattice(corpus::kS2xS2)) == A{1, 0, 2, 0, 1});
    CHECK(betti_z2(lattice(corpus::kK3)) == A{1, 0, 22, 0, 1});
}

TEST_CASE("boundary of boundary vanishes", "[homology]") {
    for (const char* sig : {corpus::kOrientable[0], corpus::kNonOrientable[4],
                            corpus::kCP2, corpus::kS2xS2}) {
        INFO(sig);
        FaceLattice lat = lattice(sig);
        auto d = boundary_matrices_z2(lat);
        for (int k = 1; k < 4; ++k) {
            // d[k-1]: rows (k-1)-classes, cols k-classes
            const Z2Matrix& a = d[k - 1];
            const Z2Matrix& b = d[k];
            REQUIRE(a.cols() == b.rows());
            for (long i = 0; i < a.rows(); ++i)
                for (long j = 0; j < b.cols(); ++j) {
                    int sum = 0;
                    for (long m = 0; m < a.cols(); ++m)
                        sum ^= (a.at(i, m) && b.at(m, j)) ? 1 : 0;
                    CHECK(sum == 0);
                }
        }
    }
}

TEST_CASE("rank agrees with an independent elimination", "[homology]") {
    for (const char* sig :
         {corpus::kOrientable[0], corpus::kOrientable[2],
          corpus::kNonOrientable[0], corpus::kCP2, corpus::kS2xS2}) {
        INFO(sig);
        auto d = boundary_matrices_z2(lattice(sig));
        for (int k = 0; k < 4; ++k) CHECK(d[k].rank() == basis_rank(d[k]));
    }
}

TEST_CASE("alternating betti sum equals euler characteristic", "[homology]") {
    for (const char* sig : corpus::kOrientable) {
        FaceLattice lat = lattice(sig);
        auto b = betti_z2(lat);
        CHECK(b[0] - b[1] + b[2] - b[3] + b[4] == lat.euler_characteristic());
    }
    for (const char* sig : corpus::kNonOrientable) {
        FaceLattice lat = lattice(sig);
        auto b = betti_z2(lat);
        CHECK(b[0] - b[1] + b[2] - b[3] + b[4] == lat.euler_characteristic());
    }
}

TEST_CASE("genus lower bounds", "[homology]") {
    auto bound = [](const char* sig) {
        Triangulation t = decode_isosig(sig);
        FaceLattice lat = build_face_lattice(t);
        return trisection_genus_lower_bound(t, lat);
    };
    CHECK(bound(corpus::kOrientable[0]) == 1);   // S3 x S1
    CHECK(bound(corpus::kOrientable[2]) == 0);   // S4
    CHECK(bound(corpus::kNonOrientable[0]) == 4);  // RP4: 2(b1+b2)
    CHECK(bound(corpus::kNonOrientable[1]) == 2);  // twisted bundle
    CHECK(bound(corpus::kCP2) == 1);
    CHECK(bound(corpus::kS2xS2) == 2);
    CHECK(bound(corpus::kK3) == 22);
}

TEST_CASE("open complexes are rejected", "[homology]") {
    CHECK_THROWS_AS(betti_z2(build_face_lattice(Triangulation(1))),
                    std::invalid_argument);
}

TEST_CASE("Z2Matrix basics", "[homology]") {
    Z2Matrix m(3, 3);
    CHECK(m.rank() == 0);
    m.flip(0, 0);
    m.flip(1, 1);
    CHECK(m.rank() == 2);
    m.flip(2, 0);
    m.flip(2, 1);
    CHECK(m.rank() == 2);  // third row is the sum of the first two
    m.flip(2, 2);
    CHECK(m.rank() == 3);
    m.flip(0, 0);
    CHECK_FALSE(m.at(0, 0));
}
