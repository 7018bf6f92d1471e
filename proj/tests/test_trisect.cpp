#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <string>

#include "corpus.hpp"
#include "trisector/face_lattice.hpp"
#include "trisector/isosig.hpp"
#include "trisector/trisect.hpp"

using namespace trisector;

namespace {

struct Setup {
    Triangulation tri;
    FaceLattice lat;
    TriangulationAnalysis a;
    explicit Setup(const char* sig)
        : tri(decode_isosig(sig)),
          lat(build_face_lattice(tri)),
          a(analyze_triangulation(tri, lat)) {}
};

// Two pentachora, each with facets 0-1 and 2-3 glued to themselves and
// facet 4 glued across.  The corner identifications merge the vertex
// classes down to two.
Triangulation two_vertex_example() {
    const Perm5 t01 = Perm5::transposition(0, 1);
    const Perm5 swirl = Perm5::transposition(2, 3) * Perm5::transposition(0, 4);
    Triangulation t(2);
    for (int p = 0; p < 2; ++p) {
        t.join(p, 0, p, t01);
        t.join(p, 2, p, swirl);
    }
    t.join(0, 4, 1, Perm5());
    t.validate();
    return t;
}

// Same shape, but pentachoron 0 keeps three vertex classes while a
// triangle of pentachoron 1 has all corners in one class.
Triangulation mono_triangle_example() {
    const Perm5 t01 = Perm5::transposition(0, 1);
    const Perm5 t23 = Perm5::transposition(2, 3);
    const Perm5 swirl = t23 * Perm5::transposition(0, 4);
    Triangulation t(2);
    t.join(0, 0, 0, t01);
    t.join(0, 2, 0, t23);
    t.join(1, 0, 1, t01);
    t.join(1, 2, 1, swirl);
    t.join(0, 4, 1, Perm5());
    t.validate();
    return t;
}

}  // namespace

TEST_CASE("preliminary screens", "[trisect]") {
    for (const char* sig : corpus::kOrientable)
        CHECK(preliminary_checks(build_face_lattice(decode_isosig(sig))).pass);

    Triangulation two = two_vertex_example();
    FaceLattice lat2 = build_face_lattice(two);
    CHECK(lat2.count(0) == 2);
    PreliminaryResult r2 = preliminary_checks(lat2);
    CHECK_FALSE(r2.pass);
    CHECK(r2.reason.find("vertex classes") != std::string::npos);
    CHECK(enumerate_tricolourings(lat2).empty());
    TriangulationAnalysis a2 = analyze_triangulation(two, lat2);
    CHECK(a2.n_tc == 0);

    Triangulation mono = mono_triangle_example();
    FaceLattice lat3 = build_face_lattice(mono);
    CHECK(lat3.count(0) == 3);
    PreliminaryResult r3 = preliminary_checks(lat3);
    CHECK_FALSE(r3.pass);
    CHECK(r3.reason.find("triangle") != std::string::npos);
}

TEST_CASE("S4 with three trisection types", "[trisect]") {
    Setup s(corpus::kS4MultiType);
    CHECK(s.a.n_tc == 15);
    CHECK(s.a.n_c == 15);
    CHECK(s.a.n_ts == 15);
    CHECK(s.a.lower_bound == 0);
    std::map<TrisectionType, long> want = {
        {{0, {0, 0, 0}}, 10},
        {{1, {1, 0, 0}}, 4},
        {{2, {1, 1, 0}}, 1},
    };
    CHECK(s.a.ts_types == want);
    CHECK(s.a.minimal);
    for (const auto& r : s.a.reports) {
        REQUIRE(r.level == Level::ts_tricolouring);
        CHECK(r.surface_orientable);
        // minimal exactly when the type is (0;0,0,0): genus matches
        // the bound only there, and only balls give the second route
        CHECK(r.minimal == (r.type->genus == 0));
    }
}

TEST_CASE("minimal orientable rows", "[trisect]") {
    for (int i = 0; i < 11; ++i) {
        INFO(corpus::kOrientable[i]);
        Setup s(corpus::kOrientable[i]);
        CHECK(s.a.n_ts >= 1);
        CHECK(s.a.minimal);
        TrisectionType listed =
            i < corpus::kNumS3xS1
                ? TrisectionType{1, {1, 1, 1}}
                : TrisectionType{0, {0, 0, 0}};
        CHECK(s.a.ts_types.count(listed) == 1);
        // the listed type is the smallest supported one
        CHECK(s.a.ts_types.begin()->first == listed);
    }
}

TEST_CASE("crystallisations support exactly the balanced trisection",
          "[trisect]") {
    struct Row {
        const char* sig;
        long b2;
    };
    for (const Row& row : {Row{corpus::kCP2, 1}, Row{corpus::kS2xS2, 2},
                           Row{corpus::kK3, 22}}) {
        INFO(row.sig);
        Setup s(row.sig);
        CHECK(s.a.n_tc == 15);
        CHECK(s.a.n_c == 15);
        CHECK(s.a.n_ts == 15);
        REQUIRE(s.a.ts_types.size() == 1);
        CHECK(s.a.ts_types.begin()->first ==
              TrisectionType{row.b2, {0, 0, 0}});
        CHECK(s.a.ts_types.begin()->second == 15);
        CHECK(s.a.minimal);
    }
}

TEST_CASE("non-orientable rows at depth zero", "[trisect]") {
    // only rows 1, 3, 4 and 8 support a trisection without moves
    const std::map<int, TrisectionType> expected = {
        {1, {2, {1, 1, 1}}},
        {3, {2, {1, 1, 1}}},
        {4, {4, {1, 1, 1}}},
        {8, {4, {1, 1, 1}}},
    };
    for (int i = 0; i < 13; ++i) {
        INFO(corpus::kNonOrientable[i]);
        Setup s(corpus::kNonOrientable[i]);
        CHECK_FALSE(s.a.orientable);
        auto it = expected.find(i);
        if (it == expected.end()) {
            CHECK(s.a.n_ts == 0);
        } else {
            REQUIRE(s.a.n_ts == 1);
            CHECK(s.a.ts_types.begin()->first == it->second);
            CHECK(s.a.minimal);  // genus equals 2(b1 + b2)
        }
        CHECK(s.a.n_tc == (i == 0 ? 2 : 1));
    }
}

TEST_CASE("tricolouring validity and enumeration", "[trisect]") {
    Setup s(corpus::kCP2);
    auto cs = enumerate_tricolourings(s.lat);
    CHECK(cs.size() == 15);
    for (const auto& c : cs) {
        CHECK(c.colour.size() == static_cast<std::size_t>(s.lat.count(0)));
        CHECK(is_valid_tricolouring(s.lat, c));
    }
    // colourings enumerate unordered partitions: the first class is
    // always in the first colour
    for (const auto& c : cs) CHECK(c.colour[0] == 0);
    // a colour pattern violating (2,2,1) on some pentachoron is invalid
    Tricolouring bad;
    bad.colour = {0, 0, 0, 1, 2};
    CHECK_FALSE(is_valid_tricolouring(s.lat, bad));
}

TEST_CASE("vertex spine graphs carry the handlebody genera", "[trisect]") {
    for (const char* sig :
         {corpus::kOrientable[0], corpus::kS4MultiType, corpus::kK3}) {
        Setup s(sig);
        for (std::size_t i = 0; i < s.a.reports.size(); ++i) {
            const auto& r = s.a.reports[i];
            if (r.level != Level::ts_tricolouring) continue;
            auto gs = vertex_spine_graphs(s.lat, s.a.tricolourings[i]);
            std::array<long, 3> ranks{gs[0].cycle_rank(), gs[1].cycle_rank(),
                                      gs[2].cycle_rank()};
            std::sort(ranks.rbegin(), ranks.rend());
            CHECK(ranks == r.type->handlebody_genera);
            for (const auto& g : gs) CHECK(g.connected());
        }
    }
}

TEST_CASE("pair spine complexes of the crystallisations", "[trisect]") {
    // for the colouring whose singleton colour is excluded, the square
    // complex has |x| * |y| = 4 vertices
    auto sizes = [](const char* sig, std::array<long, 3> want) {
        Setup s(sig);
        bool found = false;
        for (std::size_t i = 0; i < s.a.tricolourings.size() && !found; ++i) {
            const auto& c = s.a.tricolourings[i];
            std::array<int, 3> count{};
            for (uint8_t k : c.colour) ++count[k];
            for (int k = 0; k < 3; ++k) {
                if (count[k] != 1) continue;
                CubicalSpine sp = pair_spine_complex(s.lat, c, k);
                CHECK(static_cast<long>(sp.cells0.size()) == want[0]);
                CHECK(static_cast<long>(sp.cells1.size()) == want[1]);
                CHECK(static_cast<long>(sp.cells2.size()) == want[2]);
                CHECK(sp.connected);
                CHECK(sp.ends.size() == sp.cells1.size());
                CHECK(sp.sides.size() == sp.cells2.size());
                CollapseResult col = greedy_collapse(sp);
                CHECK(col.collapsed);
                // chi is a collapse invariant; a collapsed connected
                // complex is a graph of cycle rank 1 - chi
                const long chi = want[0] - want[1] + want[2];
                CHECK(col.cycle_rank == 1 - chi);
                found = true;
                break;
            }
        }
        CHECK(found);
    };
    sizes(corpus::kCP2, {4, 8, 4});
    sizes(corpus::kK3, {4, 92, 67});
}

TEST_CASE("collapse verdict ignores the pick order", "[trisect]") {
    Setup s(corpus::kNonOrientable[5]);  // fails at the collapse stage
    REQUIRE(s.a.n_c == 1);
    REQUIRE(s.a.n_ts == 0);
    const Tricolouring& c = s.a.tricolourings[0];
    for (int k = 0; k < 3; ++k) {
        CubicalSpine sp = pair_spine_complex(s.lat, c, k);
        CollapseResult base = greedy_collapse(sp);
        std::mt19937 rng(k + 1);
        for (int trial = 0; trial < 100; ++trial) {
            CollapseResult r = greedy_collapse(sp, &rng);
            CHECK(r.collapsed == base.collapsed);
            CHECK(r.cycle_rank == base.cycle_rank);
            CHECK(r.components == base.components);
        }
    }
}

TEST_CASE("failure reasons name the stage", "[trisect]") {
    // row 9 fails the connectivity of a vertex spine graph
    Setup s9(corpus::kNonOrientable[9]);
    CHECK(s9.a.n_c == 0);
    REQUIRE(s9.a.reports.size() == 1);
    CHECK(s9.a.reports[0].level == Level::tricolouring);
    CHECK(s9.a.reports[0].failure.find("disconnected") != std::string::npos);

    // row 5 reaches the spine complexes but does not collapse
    Setup s5(corpus::kNonOrientable[5]);
    REQUIRE(s5.a.reports.size() == 1);
    CHECK(s5.a.reports[0].level == Level::c_tricolouring);
    CHECK(s5.a.reports[0].failure.find("collapse") != std::string::npos);
}

TEST_CASE("central surfaces", "[trisect]") {
    // K3: 15 colourings, one orientable genus-22 surface each
    Setup k3(corpus::kK3);
    for (const auto& c : k3.a.tricolourings) {
        CentralSurface cs = central_surface(k3.tri, k3.lat, c);
        CHECK(cs.faces == 134);
        CHECK(cs.chi == -42);
        CHECK(cs.connected);
        CHECK(cs.orientable);
        CHECK(cs.genus == 22);
    }
    // twisted bundle row: Klein-bottle central surface (crosscap 2)
    Setup tw(corpus::kNonOrientable[1]);
    REQUIRE(tw.a.n_ts == 1);
    CentralSurface cs = central_surface(tw.tri, tw.lat, tw.a.tricolourings[0]);
    CHECK(cs.chi == 0);
    CHECK_FALSE(cs.orientable);
    CHECK(cs.genus == 2);
    CHECK(cs.vertices - cs.edges + cs.faces == cs.chi);
}

TEST_CASE("analysis requires a closed connected complex", "[trisect]") {
    Triangulation open(1);
    CHECK_THROWS_AS(analyze_triangulation(open, build_face_lattice(open)),
                    std::invalid_argument);
}
