#include "trisector/trisect.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisector {

namespace {

// Colours of the corners spanned by `mask` in pentachoron `pent`.
template <typename Out>
void corner_colours(const FaceLattice& lat, const Tricolouring& c, int pent,
                    uint8_t mask, Out out) {
    for (int v = 0; v < 5; ++v)
        if (mask & (1u << v)) *out++ = c.colour[lat.vertex_class(pent, v)];
}

struct UnionFind {
    std::vector<int32_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int32_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

PreliminaryResult preliminary_checks(const FaceLattice& lat) {
    if (lat.count(0) < 3)
        return {false, "fewer than three vertex classes"};
    for (int id = 0; id < lat.count(2); ++id) {
        const auto& [pent, mask] = lat.face(2, id).incidences.front();
        uint8_t cls[3];
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (mask & (1u << v))
                cls[k++] = static_cast<uint8_t>(lat.vertex_class(pent, v));
        if (cls[0] == cls[1] && cls[1] == cls[2])
            return {false, "a triangle class has all corners at one vertex"};
    }
    return {true, {}};
}

bool is_valid_tricolouring(const FaceLattice& lat, const Tricolouring& c) {
    if (static_cast<int>(c.colour.size()) != lat.count(0)) return false;
    std::array<long, 3> used{0, 0, 0};
    for (uint8_t col : c.colour) {
        if (col > 2) return false;
        ++used[col];
    }
    if (used[0] == 0 || used[1] == 0 || used[2] == 0) return false;

    // Every pentachoron must see its five corners coloured (2,2,1).
    for (int p = 0; p < lat.pentachora(); ++p) {
        std::array<int, 3> counts{0, 0, 0};
        for (int v = 0; v < 5; ++v)
            ++counts[c.colour[lat.vertex_class(p, v)]];
        std::sort(counts.begin(), counts.end());
        if (counts[0] != 1 || counts[1] != 2 || counts[2] != 2) return false;
    }
    // No triangle class may be monochromatic.  (Implied by the corner
    // pattern, but cheap and checked independently.)
    for (int id = 0; id < lat.count(2); ++id) {
        const auto& [pent, mask] = lat.face(2, id).incidences.front();
        uint8_t cols[3];
        corner_colours(lat, c, pent, mask, cols);
        if (cols[0] == cols[1] && cols[1] == cols[2]) return false;
    }
    return true;
}

std::vector<Tricolouring> enumerate_tricolourings(const FaceLattice& lat) {
    std::vector<Tricolouring> out;
    const int V = lat.count(0);
    if (V < 3) return out;

    Tricolouring c;
    c.colour.assign(V, 0);
    // Restricted-growth enumeration: vertex class 0 takes colour 0 and
    // each later class may exceed the running maximum by at most one,
    // so every unordered partition appears exactly once.
    auto rec = [&](auto&& self, int i, int maxUsed) -> void {
        if (i == V) {
            if (maxUsed == 2 && is_valid_tricolouring(lat, c))
                out.push_back(c);
            return;
        }
        const int top = std::min(maxUsed + 1, 2);
        for (int col = 0; col <= top; ++col) {
            c.colour[i] = static_cast<uint8_t>(col);
            self(self, i + 1, std::max(maxUsed, col));
        }
        c.colour[i] = 0;
    };
    rec(rec, 1, 0);
    return out;
}

std::array<SpineGraph, 3> vertex_spine_graphs(const FaceLattice& lat,
                                              const Tricolouring& c) {
    std::array<SpineGraph, 3> g{};
    for (uint8_t col : c.colour) ++g[col].vertices;

    UnionFind uf(c.colour.size());
    for (int id = 0; id < lat.count(1); ++id) {
        const auto& [pent, mask] = lat.face(1, id).incidences.front();
        int ends[2];
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (mask & (1u << v)) ends[k++] = lat.vertex_class(pent, v);
        if (c.colour[ends[0]] != c.colour[ends[1]]) continue;
        ++g[c.colour[ends[0]]].edges;
        uf.unite(ends[0], ends[1]);
    }
    for (std::size_t v = 0; v < c.colour.size(); ++v)
        if (uf.find(static_cast<int>(v)) == static_cast<int>(v))
            ++g[c.colour[v]].components;
    return g;
}

bool is_c_tricolouring(const FaceLattice& lat, const Tricolouring& c) {
    if (!is_valid_tricolouring(lat, c)) return false;
    const auto g = vertex_spine_graphs(lat, c);
    return g[0].connected() && g[1].connected() && g[2].connected();
}

CubicalSpine pair_spine_complex(const FaceLattice& lat, const Tricolouring& c,
                                int excluded) {
    CubicalSpine s;
    std::vector<int32_t> loc0(lat.count(1), -1), loc1(lat.count(2), -1);

    auto pair_pattern = [&](int pent, uint8_t mask, int corners) {
        // Returns true when the corners use exactly the two colours of
        // the pair (both present, excluded colour absent).
        std::array<int, 3> counts{0, 0, 0};
        uint8_t cols[4];
        corner_colours(lat, c, pent, mask, cols);
        for (int i = 0; i < corners; ++i) ++counts[cols[i]];
        return counts[excluded] == 0 &&
               counts[(excluded + 1) % 3] > 0 &&
               counts[(excluded + 2) % 3] > 0;
    };

    for (int id = 0; id < lat.count(1); ++id) {
        const auto& [pent, mask] = lat.face(1, id).incidences.front();
        if (!pair_pattern(pent, mask, 2)) continue;
        loc0[id] = static_cast<int32_t>(s.cells0.size());
        s.cells0.push_back(id);
    }
    for (int id = 0; id < lat.count(2); ++id) {
        const auto& [pent, mask] = lat.face(2, id).incidences.front();
        if (!pair_pattern(pent, mask, 3)) continue;
        loc1[id] = static_cast<int32_t>(s.cells1.size());
        s.cells1.push_back(id);
        // The two bicoloured edges of the triangle are its 0-cell ends
        // (possibly the same class twice: a loop).
        std::array<int, 2> ends{-1, -1};
        int k = 0;
        for (int v = 0; v < 5; ++v) {
            if (!(mask & (1u << v))) continue;
            const uint8_t sub = static_cast<uint8_t>(mask ^ (1u << v));
            const int e = lat.class_of(1, pent, sub);
            if (loc0[e] < 0) continue;  // monochromatic edge of the pair
            if (k == 2) throw std::logic_error("triangle with three pair edges");
            ends[k++] = loc0[e];
        }
        if (k != 2)
            throw std::logic_error("bicoloured triangle without two pair edges");
        s.ends.push_back(ends);
    }
    for (int id = 0; id < lat.count(3); ++id) {
        const auto& [pent, mask] = lat.face(3, id).incidences.front();
        if (!pair_pattern(pent, mask, 4)) continue;
        s.cells2.push_back(id);
        std::array<int, 4> sides{};
        int k = 0;
        for (int v = 0; v < 5; ++v) {
            if (!(mask & (1u << v))) continue;
            const uint8_t sub = static_cast<uint8_t>(mask ^ (1u << v));
            const int tri = lat.class_of(2, pent, sub);
            if (loc1[tri] < 0)
                throw std::logic_error("square side is not a spine 1-cell");
            sides[k++] = loc1[tri];
        }
        s.sides.push_back(sides);
    }

    // Connectivity of the incidence (Hasse) diagram.
    const std::size_t n0 = s.cells0.size(), n1 = s.cells1.size(),
                      n2 = s.cells2.size();
    UnionFind uf(n0 + n1 + n2);
    for (std::size_t e = 0; e < n1; ++e) {
        uf.unite(static_cast<int>(n0 + e), s.ends[e][0]);
        uf.unite(static_cast<int>(n0 + e), s.ends[e][1]);
    }
    for (std::size_t q = 0; q < n2; ++q)
        for (int f : s.sides[q])
            uf.unite(static_cast<int>(n0 + n1 + q), static_cast<int>(n0 + f));
    long roots = 0;
    for (std::size_t i = 0; i < n0 + n1 + n2; ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    s.connected = (n0 + n1 + n2 > 0) && roots == 1;
    return s;
}

CollapseResult greedy_collapse(const CubicalSpine& spine, std::mt19937* shuffle) {
    const std::size_t n1 = spine.cells1.size(), n2 = spine.cells2.size();
    std::vector<int> mult(n1, 0);
    std::vector<std::vector<int32_t>> touching(n1);  // 2-cells, with repeats
    for (std::size_t q = 0; q < n2; ++q) {
        for (int f : spine.sides[q]) {
            ++mult[f];
            touching[f].push_back(static_cast<int32_t>(q));
        }
    }
    std::vector<char> alive1(n1, 1), alive2(n2, 1);
    std::vector<int32_t> candidates;
    for (std::size_t f = 0; f < n1; ++f)
        if (mult[f] == 1) candidates.push_back(static_cast<int32_t>(f));

    std::size_t remaining2 = n2;
    while (!candidates.empty()) {
        std::size_t pick = candidates.size() - 1;
        if (shuffle)
            pick = std::uniform_int_distribution<std::size_t>(
                0, candidates.size() - 1)(*shuffle);
        const int f = candidates[pick];
        candidates[pick] = candidates.back();
        candidates.pop_back();
        if (!alive1[f] || mult[f] != 1) continue;

        int q = -1;  // the unique surviving square containing f
        for (int32_t cand : touching[f])
            if (alive2[cand]) {
                q = cand;
                break;
            }
        if (q < 0) throw std::logic_error("free edge without a square");

        alive2[q] = 0;
        --remaining2;
        alive1[f] = 0;
        for (int side : spine.sides[q]) {
            if (!alive1[side]) continue;
            --mult[side];
            if (mult[side] == 1) candidates.push_back(side);
        }
    }

    CollapseResult res;
    res.collapsed = remaining2 == 0;

    // The surviving 1-complex: every 0-cell plus the surviving 1-cells.
    UnionFind uf(spine.cells0.size());
    for (std::size_t f = 0; f < n1; ++f) {
        if (!alive1[f]) continue;
        ++res.surviving_edges;
        uf.unite(spine.ends[f][0], spine.ends[f][1]);
    }
    for (std::size_t v = 0; v < spine.cells0.size(); ++v)
        if (uf.find(static_cast<int>(v)) == static_cast<int>(v))
            ++res.components;
    res.cycle_rank = res.surviving_edges -
                     static_cast<long>(spine.cells0.size()) + res.components;
    return res;
}

CentralSurface central_surface(const Triangulation& t, const FaceLattice& lat,
                               const Tricolouring& c) {
    const int n = t.size();
    CentralSurface surf;
    surf.faces = n;

    for (int id = 0; id < lat.count(2); ++id) {
        const auto& [pent, mask] = lat.face(2, id).incidences.front();
        uint8_t cols[3];
        corner_colours(lat, c, pent, mask, cols);
        if (cols[0] != cols[1] && cols[1] != cols[2] && cols[0] != cols[2])
            ++surf.vertices;
    }
    std::vector<char> triTet(lat.count(3), 0);
    for (int id = 0; id < lat.count(3); ++id) {
        const auto& [pent, mask] = lat.face(3, id).incidences.front();
        std::array<int, 3> counts{0, 0, 0};
        uint8_t cols[4];
        corner_colours(lat, c, pent, mask, cols);
        for (int i = 0; i < 4; ++i) ++counts[cols[i]];
        if (counts[0] > 0 && counts[1] > 0 && counts[2] > 0) {
            triTet[id] = 1;
            ++surf.edges;
        }
    }
    surf.chi = surf.vertices - surf.edges + surf.faces;

    // One square per pentachoron.  With doubled colours at corners
    // a1 < a2 and b1 < b2 and the singleton at z, the square's corners
    // sit on the triangles {ai, bj, z} in the cycle
    // (a1b1) (a2b1) (a2b2) (a1b2), and its sides lie in the four
    // tricoloured facets (the ones dropping a doubled corner).
    struct Side {
        int facet;
        uint8_t from, to;  // corner-triangle masks, in cycle direction
    };
    std::vector<std::array<Side, 4>> quads(n);
    for (int p = 0; p < n; ++p) {
        std::array<std::vector<int>, 3> byColour;
        for (int v = 0; v < 5; ++v)
            byColour[c.colour[lat.vertex_class(p, v)]].push_back(v);
        int z = -1;
        std::array<int, 2> a{}, b{};
        bool haveA = false;
        for (int col = 0; col < 3; ++col) {
            if (byColour[col].size() == 1) {
                z = byColour[col][0];
            } else if (byColour[col].size() == 2) {
                (haveA ? b : a) = {byColour[col][0], byColour[col][1]};
                haveA = true;
            } else {
                throw std::logic_error("central_surface: corner pattern is not (2,2,1)");
            }
        }
        auto corner = [&](int ai, int bj) {
            return static_cast<uint8_t>((1u << ai) | (1u << bj) | (1u << z));
        };
        const uint8_t q0 = corner(a[0], b[0]), q1 = corner(a[1], b[0]),
                      q2 = corner(a[1], b[1]), q3 = corner(a[0], b[1]);
        quads[p] = {Side{b[1], q0, q1}, Side{a[0], q1, q2},
                    Side{b[0], q2, q3}, Side{a[1], q3, q0}};
    }

    // Orientation: o_p says whether the square's own cycle is used
    // forward or backward.  Two squares are compatible across a shared
    // side when they traverse it in opposite directions.
    std::vector<int8_t> orient(n, 0);
    bool orientable = true;
    long reached = 0;
    std::vector<int> stack;
    for (int root = 0; root < n && root < 1; ++root) {
        orient[root] = 1;
        ++reached;
        stack.push_back(root);
    }
    while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        for (const Side& side : quads[p]) {
            const Gluing& g = t.adjacent(p, side.facet);
            if (g.boundary())
                throw std::invalid_argument("central_surface: triangulation is not closed");
            const int q = g.pent;
            const int qFacet = g.map[side.facet];
            const Side* other = nullptr;
            for (const Side& cand : quads[q])
                if (cand.facet == qFacet) other = &cand;
            if (!other)
                throw std::logic_error("central_surface: glued side is not a square side");
            const uint8_t fromImg = apply_to_mask(g.map, side.from);
            int dir;
            if (fromImg == other->from) {
                dir = 1;  // same direction along the shared edge
            } else if (fromImg == other->to) {
                dir = -1;
            } else {
                throw std::logic_error("central_surface: side endpoints do not match");
            }
            const int8_t want = static_cast<int8_t>(dir > 0 ? -orient[p] : orient[p]);
            if (orient[q] == 0) {
                orient[q] = want;
                ++reached;
                stack.push_back(q);
            } else if (orient[q] != want) {
                orientable = false;
            }
        }
    }
    surf.connected = reached == n;
    // For a disconnected quad graph, finish the remaining components so
    // the orientability verdict covers the whole surface.
    for (int root = 0; root < n; ++root) {
        if (orient[root] != 0) continue;
        orient[root] = 1;
        ++reached;
        stack.push_back(root);
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            for (const Side& side : quads[p]) {
                const Gluing& g = t.adjacent(p, side.facet);
                const int q = g.pent;
                const Side* other = nullptr;
                for (const Side& cand : quads[q])
                    if (cand.facet == g.map[side.facet]) other = &cand;
                const uint8_t fromImg = apply_to_mask(g.map, side.from);
                const int dir = fromImg == other->from ? 1 : -1;
                const int8_t want =
                    static_cast<int8_t>(dir > 0 ? -orient[p] : orient[p]);
                if (orient[q] == 0) {
                    orient[q] = want;
                    stack.push_back(q);
                } else if (orient[q] != want) {
                    orientable = false;
                }
            }
        }
    }
    surf.orientable = orientable;

    if (surf.orientable) {
        if ((2 - surf.chi) % 2 != 0)
            throw std::logic_error("central_surface: odd Euler characteristic on an orientable surface");
        surf.genus = (2 - surf.chi) / 2;
    } else {
        surf.genus = 2 - surf.chi;
    }
    return surf;
}

std::string TrisectionType::str() const {
    return "(" + std::to_string(genus) + "; " +
           std::to_string(handlebody_genera[0]) + "," +
           std::to_string(handlebody_genera[1]) + "," +
           std::to_string(handlebody_genera[2]) + ")";
}

TrisectionReport analyze_tricolouring(const Triangulation& t,
                                      const FaceLattice& lat,
                                      const Tricolouring& c,
                                      bool manifold_orientable,
                                      long lower_bound) {
    TrisectionReport r;
    if (!is_valid_tricolouring(lat, c)) {
        r.level = Level::invalid;
        r.failure = "not a valid tricolouring";
        return r;
    }
    const auto spines = vertex_spine_graphs(lat, c);
    for (int col = 0; col < 3; ++col) {
        if (!spines[col].connected()) {
            r.level = Level::tricolouring;
            r.failure = "vertex spine graph for colour " +
                        std::to_string(col) + " is disconnected";
            return r;
        }
    }

    std::array<long, 3> ranks{};
    for (int excluded = 0; excluded < 3; ++excluded) {
        const CubicalSpine spine = pair_spine_complex(lat, c, excluded);
        if (!spine.connected) {
            r.level = Level::c_tricolouring;
            r.failure = "pair spine complex excluding colour " +
                        std::to_string(excluded) + " is disconnected";
            return r;
        }
        const CollapseResult res = greedy_collapse(spine);
        if (!res.collapsed) {
            r.level = Level::c_tricolouring;
            r.failure = "pair spine complex excluding colour " +
                        std::to_string(excluded) + " does not collapse";
            return r;
        }
        ranks[excluded] = res.cycle_rank;
    }

    const CentralSurface surf = central_surface(t, lat, c);
    r.surface_orientable = surf.orientable;
    if (!surf.connected) {
        r.level = Level::c_tricolouring;
        r.failure = "central surface is disconnected";
        return r;
    }

    // Cross-checks between the independent constructions; failures
    // here are bugs, not data conditions.
    if ((2 - surf.chi) % 2 != 0)
        throw std::logic_error("central surface has odd Euler characteristic");
    const long expectRank = (2 - surf.chi) / 2;
    for (long rank : ranks)
        if (rank != expectRank)
            throw std::logic_error(
                "central surface genus does not match a collapsed spine rank");
    if (surf.orientable != manifold_orientable)
        throw std::logic_error(
            "central surface orientability differs from the manifold's");
    std::array<long, 3> hb{spines[0].cycle_rank(), spines[1].cycle_rank(),
                           spines[2].cycle_rank()};
    if (lat.euler_characteristic() !=
        2 + (1 - surf.chi / 2) - (hb[0] + hb[1] + hb[2]))
        throw std::logic_error(
            "trisection data violates the Euler characteristic identity");

    std::sort(hb.begin(), hb.end(), std::greater<>());
    r.level = Level::ts_tricolouring;
    r.type = TrisectionType{surf.genus, hb};
    r.minimal = surf.genus == lower_bound ||
                (hb[0] == 0 && hb[1] == 0 && hb[2] == 0);
    return r;
}

TriangulationAnalysis analyze_triangulation(const Triangulation& t,
                                            const FaceLattice& lat) {
    if (!t.is_closed() || !t.is_connected())
        throw std::invalid_argument(
            "analyze_triangulation: need a closed connected triangulation");
    TriangulationAnalysis a;
    a.preliminary = preliminary_checks(lat);
    a.orientable = is_orientable(t);
    a.betti = betti_z2(lat);
    const long sum = a.betti[1] + a.betti[2];
    a.lower_bound = a.orientable ? sum : 2 * sum;
    if (!a.preliminary.pass) return a;

    for (const Tricolouring& c : enumerate_tricolourings(lat)) {
        TrisectionReport r =
            analyze_tricolouring(t, lat, c, a.orientable, a.lower_bound);
        ++a.n_tc;
        if (r.level == Level::c_tricolouring || r.level == Level::ts_tricolouring)
            ++a.n_c;
        if (r.level == Level::ts_tricolouring) {
            ++a.n_ts;
            ++a.ts_types[*r.type];
            a.minimal = a.minimal || r.minimal;
        }
        a.tricolourings.push_back(c);
        a.reports.push_back(std::move(r));
    }
    return a;
}

}  // namespace trisector
