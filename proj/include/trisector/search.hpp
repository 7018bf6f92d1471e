#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisector/trisect.hpp"
#include "trisector/triangulation.hpp"

namespace trisector {

struct SearchOptions {
    int max_depth = 3;
    std::size_t node_cap = 100000;  // visited isomorphism classes
    int jobs = 0;                   // 0: resolve from env/hardware
};

struct DepthStats {
    int depth = 0;
    std::size_t nodes = 0;                // isomorphism classes at this depth
    std::set<TrisectionType> types;       // ts types seen at this depth
};

// Breadth-first exploration of the 2-4 move orbit, deduplicated by
// canonical signature, analysing every node for supported trisections.
struct OrbitResult {
    std::string root;  // canonical signature of the input
    int max_depth = 0;
    bool truncated = false;  // node cap hit; results are a lower bound
    std::size_t nodes_visited = 0;
    std::vector<DepthStats> depths;
    std::optional<int> first_ts_depth;
    std::optional<TrisectionType> min_type;  // over all depths
};

// Pre: t closed and connected.
OrbitResult search_supported_trisections(const Triangulation& t,
                                         const SearchOptions& opts = {});

}  // namespace trisector
