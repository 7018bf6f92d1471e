#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "trisector/trisect.hpp"

namespace trisector {

struct CensusOptions {
    int jobs = 0;   // 0: resolve from env/hardware
    int depth = 0;  // > 0: also run the move search per record
    std::size_t node_cap = 100000;
};

// One input line's worth of results.  `ok == false` means the line did
// not decode; `error` carries the reason.
struct CensusRecord {
    std::size_t line = 0;  // 1-based line number in the input
    std::string isosig;    // the line as given (trimmed)
    bool ok = false;
    std::string error;
    long vertices = 0;
    bool screen = false;  // >= 3 vertices and no one-vertex triangle
    long n_tc = 0, n_c = 0, n_ts = 0;
    std::optional<long> min_genus;           // over ts types at depth 0
    bool minimal = false;                    // some ts type is minimal
    std::optional<int> first_ts_depth;       // only when depth > 0
    std::optional<TrisectionType> min_type;  // over the searched orbit
};

// Running totals in the shape of a per-count histogram: for each k,
// how many triangulations have exactly k tricolourings (and k
// c-tricolourings, k ts-tricolourings), plus overall counters.
struct CensusAggregate {
    long records = 0;        // non-empty, non-comment lines
    long decode_errors = 0;
    long triangulations = 0;  // decoded successfully
    long at_least_3_vertices = 0;
    long no_small_triangles = 0;  // also passes the triangle check
    long tricolourable = 0;       // n_tc >= 1
    long with_c = 0;              // n_c >= 1
    long with_ts = 0;             // n_ts >= 1
    long tricolourings = 0;       // sum of n_tc
    long c_tricolourings = 0;
    long ts_tricolourings = 0;
    std::map<long, std::array<long, 3>> histogram;  // k -> (#tc==k, #c==k, #ts==k)

    void add(const CensusRecord& r);
};

// Streams `in` line by line (blank lines and '#' comments skipped),
// decoding and analysing each signature, invoking `sink` in input
// order.  Decoding errors become records with ok == false; they never
// abort the scan.
CensusAggregate scan_census(std::istream& in, const CensusOptions& opts,
                            const std::function<void(const CensusRecord&)>& sink);

// CSV helpers for the per-record output.
std::string census_csv_header(const CensusOptions& opts);
std::string census_csv_row(const CensusRecord& r, const CensusOptions& opts);

}  // namespace trisector
