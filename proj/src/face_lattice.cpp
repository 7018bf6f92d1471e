#include "trisector/face_lattice.hpp"

#include <numeric>

namespace trisector {

namespace {

struct ComboTables {
    // masks with popcount k+1 in ascending numeric order, per dim
    std::array<std::vector<uint8_t>, 4> masks;
    std::array<std::array<int8_t, 32>, 4> index;

    ComboTables() {
        for (auto& row : index) row.fill(-1);
        for (uint8_t m = 1; m < 32; ++m) {
            const int dim = __builtin_popcount(m) - 1;
            if (dim > 3) continue;
            index[dim][m] = static_cast<int8_t>(masks[dim].size());
            masks[dim].push_back(m);
        }
    }
};

const ComboTables& tables() {
    static const ComboTables t;
    return t;
}

int find(std::vector<int32_t>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<int32_t>& parent, int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a != b) parent[b] = a;
}

}  // namespace

int FaceLattice::combo_index(int dim, uint8_t mask) {
    return tables().index[dim][mask];
}

uint8_t FaceLattice::combo_mask(int dim, int index) {
    return tables().masks[dim][index];
}

FaceLattice build_face_lattice(const Triangulation& t) {
    const auto& tab = tables();
    const int n = t.size();
    FaceLattice lat;
    lat.n_ = n;

    for (int dim = 0; dim < 4; ++dim) {
        const int c = FaceLattice::combos(dim);
        std::vector<int32_t> parent(static_cast<std::size_t>(n) * c);
        std::iota(parent.begin(), parent.end(), 0);

        // Every gluing identifies each sub-mask of the facet with its
        // image; process each gluing from one side only.
        for (int p = 0; p < n; ++p) {
            for (int f = 0; f < 5; ++f) {
                const Gluing& g = t.adjacent(p, f);
                if (g.boundary()) continue;
                if (g.pent < p || (g.pent == p && g.map[f] < f)) continue;
                const uint8_t facetMask = static_cast<uint8_t>(0x1f ^ (1u << f));
                for (uint8_t m : tab.masks[dim]) {
                    if ((m & facetMask) != m) continue;
                    unite(parent,
                          p * c + tab.index[dim][m],
                          g.pent * c + tab.index[dim][apply_to_mask(g.map, m)]);
                }
            }
        }

        // Compress to class ids in order of first occurrence.
        auto& ids = lat.class_of_[dim];
        ids.assign(parent.size(), -1);
        std::vector<int32_t> classOfRoot(parent.size(), -1);
        for (std::size_t i = 0; i < parent.size(); ++i) {
            const int root = find(parent, static_cast<int>(i));
            if (classOfRoot[root] < 0) {
                classOfRoot[root] = static_cast<int32_t>(lat.classes_[dim].size());
                lat.classes_[dim].emplace_back();
            }
            ids[i] = classOfRoot[root];
            lat.classes_[dim][ids[i]].incidences.emplace_back(
                static_cast<int32_t>(i / c),
                tab.masks[dim][i % c]);
        }
    }
    return lat;
}

}  // namespace trisector
