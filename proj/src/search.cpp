#include "trisector/search.hpp"

#include <unordered_set>

#include "trisector/isosig.hpp"
#include "trisector/jobs.hpp"
#include "trisector/moves.hpp"

namespace trisector {

OrbitResult search_supported_trisections(const Triangulation& t,
                                         const SearchOptions& opts) {
    if (!t.is_closed() || !t.is_connected())
        throw std::invalid_argument(
            "search: need a closed connected triangulation");

    OrbitResult result;
    result.root = encode_isosig(t);
    result.max_depth = opts.max_depth;

    const int jobs = resolve_jobs(opts.jobs);
    std::unordered_set<std::string> visited{result.root};
    std::vector<Triangulation> frontier{t};

    for (int depth = 0; depth <= opts.max_depth; ++depth) {
        DepthStats stats;
        stats.depth = depth;
        stats.nodes = frontier.size();

        // Analyse this level and collect each node's move neighbours.
        struct NodeOut {
            std::set<TrisectionType> types;
            std::vector<std::pair<std::string, Triangulation>> neighbours;
        };
        const bool expand = depth < opts.max_depth && !result.truncated;
        std::vector<NodeOut> outs(frontier.size());
        parallel_for(frontier.size(), jobs, [&](std::size_t i) {
            const Triangulation& node = frontier[i];
            const FaceLattice lat = build_face_lattice(node);
            const TriangulationAnalysis a = analyze_triangulation(node, lat);
            for (const auto& [type, mult] : a.ts_types)
                outs[i].types.insert(type);
            if (!expand) return;
            for (const MoveSite& site : two_four_move_sites(node, lat)) {
                Triangulation next = apply_two_four_move(node, site).tri;
                std::string sig = encode_isosig(next);
                outs[i].neighbours.emplace_back(std::move(sig), std::move(next));
            }
        });

        for (const NodeOut& out : outs) {
            for (const TrisectionType& type : out.types) {
                stats.types.insert(type);
                if (!result.min_type || type < *result.min_type)
                    result.min_type = type;
            }
        }
        if (!stats.types.empty() && !result.first_ts_depth)
            result.first_ts_depth = depth;
        result.nodes_visited += stats.nodes;
        result.depths.push_back(std::move(stats));

        if (!expand) break;
        std::vector<Triangulation> next;
        for (NodeOut& out : outs) {
            for (auto& [sig, tri] : out.neighbours) {
                if (visited.size() >= opts.node_cap) {
                    result.truncated = true;
                    break;
                }
                if (visited.insert(sig).second) next.push_back(std::move(tri));
            }
            if (result.truncated) break;
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return result;
}

}  // namespace trisector
