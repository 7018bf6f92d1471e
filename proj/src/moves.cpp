#include "trisector/moves.hpp"

#include <stdexcept>

namespace trisector {

std::vector<MoveSite> two_four_move_sites(const Triangulation& t,
                                          const FaceLattice& lat) {
    std::vector<MoveSite> sites;
    for (int id = 0; id < lat.count(3); ++id) {
        const auto& inc = lat.face(3, id).incidences;
        if (inc.size() != 2) continue;  // boundary tetrahedron
        if (inc[0].first == inc[1].first) continue;
        auto facet_of = [](uint8_t mask) {
            return __builtin_ctz(0x1fu ^ mask);
        };
        sites.push_back({id, inc[0].first, facet_of(inc[0].second),
                         inc[1].first, facet_of(inc[1].second)});
    }
    return sites;
}

MoveResult apply_two_four_move(const Triangulation& t, const MoveSite& site) {
    const int n = t.size();
    const int P = site.pent_a, fP = site.facet_a;
    const int Q = site.pent_b, fQ = site.facet_b;
    if (P == Q)
        throw std::invalid_argument("move site must join distinct pentachora");
    const Gluing& sg = t.adjacent(P, fP);
    if (sg.pent != Q || sg.map[fP] != fQ)
        throw std::invalid_argument("move site does not match the gluing table");
    const Perm5 sigma = sg.map;
    const Perm5 sigmaInv = sigma.inverse();

    // The four new pentachora R_v, one per corner v of the shared
    // tetrahedron (the labels of P other than fP).  R_v keeps P's
    // labels on V \ {v}, puts P's apex at label fP and Q's apex at
    // label v, so its facet v is P's old facet v, its facet fP covers
    // Q's old facet sigma(v), and the remaining facets join the other
    // R_u around the new apex-apex edge.
    std::array<int, 4> V{};
    {
        int k = 0;
        for (int v = 0; v < 5; ++v)
            if (v != fP) V[k++] = v;
    }
    auto rpos = [&](int v) {
        for (int i = 0; i < 4; ++i)
            if (V[i] == v) return i;
        throw std::logic_error("label is not a corner of the shared tetrahedron");
    };
    const int base = n - 2;
    auto newIndex = [&](int old) { return old - (old > P) - (old > Q); };
    // Relabelling from R_v's facet fP onto Q's facet sigma(v).
    auto m = [&](int v) { return sigma * Perm5::transposition(v, fP); };

    MoveResult result{Triangulation(n + 2), {}};
    Triangulation& out = result.tri;
    auto joinOnce = [&](int p, int f, int q, const Perm5& perm) {
        if (!out.is_glued(p, f)) {
            out.join(p, f, q, perm);
            return;
        }
        const Gluing& g = out.adjacent(p, f);
        if (g.pent != q || !(g.map == perm))
            throw std::logic_error("rebuilt gluing table is inconsistent");
    };
    // Routes an old gluing target to the rebuilt triangulation:
    // (dest, rho) seen from some old flag becomes a new (pent, perm).
    auto route = [&](int dest, const Perm5& rho, int srcFacet)
        -> std::pair<int, Perm5> {
        if (dest == P) return {base + rpos(rho[srcFacet]), rho};
        if (dest == Q) {
            const int vp = sigmaInv[rho[srcFacet]];
            return {base + rpos(vp), m(vp).inverse() * rho};
        }
        return {newIndex(dest), rho};
    };

    for (int o = 0; o < n; ++o) {
        if (o == P || o == Q) continue;
        for (int f = 0; f < 5; ++f) {
            const Gluing& g = t.adjacent(o, f);
            if (g.boundary()) continue;
            const auto [q, perm] = route(g.pent, g.map, f);
            joinOnce(newIndex(o), f, q, perm);
        }
    }
    for (int i = 0; i < 4; ++i) {
        const int v = V[i];
        const int rv = base + i;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            joinOnce(rv, V[j], base + j, Perm5::transposition(V[j], v));
        }
        // P-side facet.
        const Gluing& gp = t.adjacent(P, v);
        if (!gp.boundary()) {
            const auto [q, perm] = route(gp.pent, gp.map, v);
            joinOnce(rv, v, q, perm);
        }
        // Q-side facet.
        const int w = sigma[v];
        const Gluing& gq = t.adjacent(Q, w);
        if (!gq.boundary()) {
            const Perm5 mv = m(v);
            const auto [q, perm] = route(gq.pent, gq.map * mv, fP);
            joinOnce(rv, fP, q, perm);
        }
    }
    out.validate();

    result.corner_origin.resize(n + 2);
    for (int o = 0; o < n; ++o) {
        if (o == P || o == Q) continue;
        for (int u = 0; u < 5; ++u)
            result.corner_origin[newIndex(o)][u] = {o, static_cast<uint8_t>(u)};
    }
    for (int i = 0; i < 4; ++i) {
        auto& origins = result.corner_origin[base + i];
        for (int u = 0; u < 5; ++u) origins[u] = {P, static_cast<uint8_t>(u)};
        origins[V[i]] = {Q, static_cast<uint8_t>(fQ)};
    }
    return result;
}

MoveKind classify_move(const FaceLattice& lat, const Tricolouring& c,
                       const MoveSite& site) {
    std::array<int, 3> counts{0, 0, 0};
    for (int v = 0; v < 5; ++v) {
        if (v == site.facet_a) continue;
        ++counts[c.colour[lat.vertex_class(site.pent_a, v)]];
    }
    int coloursUsed = 0;
    for (int col = 0; col < 3; ++col) coloursUsed += counts[col] > 0;
    if (coloursUsed == 2) return MoveKind::extends_spine;
    if (coloursUsed != 3)
        throw std::invalid_argument("classify_move: colouring is not valid");
    const int ca = c.colour[lat.vertex_class(site.pent_a, site.facet_a)];
    const int cb = c.colour[lat.vertex_class(site.pent_b, site.facet_b)];
    return ca != cb ? MoveKind::preserves_spines : MoveKind::breaks_colouring;
}

}  // namespace trisector
