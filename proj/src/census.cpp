#include "trisector/census.hpp"

#include <istream>
#include <sstream>

#include "trisector/isosig.hpp"
#include "trisector/jobs.hpp"
#include "trisector/search.hpp"

namespace trisector {

void CensusAggregate::add(const CensusRecord& r) {
    ++records;
    if (!r.ok) {
        ++decode_errors;
        return;
    }
    ++triangulations;
    if (r.vertices >= 3) ++at_least_3_vertices;
    if (r.screen) ++no_small_triangles;
    tricolourings += r.n_tc;
    c_tricolourings += r.n_c;
    ts_tricolourings += r.n_ts;
    if (r.n_tc > 0) {
        ++tricolourable;
        ++histogram[r.n_tc][0];
    }
    if (r.n_c > 0) {
        ++with_c;
        ++histogram[r.n_c][1];
    }
    if (r.n_ts > 0) {
        ++with_ts;
        ++histogram[r.n_ts][2];
    }
}

namespace {

CensusRecord analyse_line(std::size_t lineNo, const std::string& sig,
                          const CensusOptions& opts) {
    CensusRecord rec;
    rec.line = lineNo;
    rec.isosig = sig;
    Triangulation t(0);
    try {
        t = decode_isosig(sig);
        if (!t.is_closed())
            throw std::invalid_argument("triangulation is not closed");
    } catch (const std::exception& e) {
        rec.error = e.what();
        return rec;
    }
    rec.ok = true;
    const FaceLattice lat = build_face_lattice(t);
    rec.vertices = lat.count(0);
    const TriangulationAnalysis a = analyze_triangulation(t, lat);
    rec.screen = a.preliminary.pass;
    rec.n_tc = a.n_tc;
    rec.n_c = a.n_c;
    rec.n_ts = a.n_ts;
    rec.minimal = a.minimal;
    if (!a.ts_types.empty()) {
        rec.min_genus = a.ts_types.begin()->first.genus;
        rec.min_type = a.ts_types.begin()->first;
    }
    if (opts.depth > 0) {
        SearchOptions sopts;
        sopts.max_depth = opts.depth;
        sopts.node_cap = opts.node_cap;
        sopts.jobs = 1;  // parallelism is across records
        const OrbitResult orbit = search_supported_trisections(t, sopts);
        rec.first_ts_depth = orbit.first_ts_depth;
        if (orbit.min_type) {
            rec.min_type = orbit.min_type;
            rec.min_genus = orbit.min_type->genus;
        }
    }
    return rec;
}

}  // namespace

CensusAggregate scan_census(std::istream& in, const CensusOptions& opts,
                            const std::function<void(const CensusRecord&)>& sink) {
    CensusAggregate agg;
    const int jobs = resolve_jobs(opts.jobs);
    const std::size_t chunkSize = 1024;

    std::vector<std::pair<std::size_t, std::string>> chunk;
    std::string line;
    std::size_t lineNo = 0;
    bool eof = false;
    while (!eof) {
        chunk.clear();
        while (chunk.size() < chunkSize) {
            if (!std::getline(in, line)) {
                eof = true;
                break;
            }
            ++lineNo;
            const auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos || line[begin] == '#') continue;
            const auto end = line.find_last_not_of(" \t\r");
            chunk.emplace_back(lineNo, line.substr(begin, end - begin + 1));
        }
        if (chunk.empty()) continue;

        std::vector<CensusRecord> records(chunk.size());
        parallel_for(chunk.size(), jobs, [&](std::size_t i) {
            records[i] = analyse_line(chunk[i].first, chunk[i].second, opts);
        });
        for (const CensusRecord& rec : records) {
            agg.add(rec);
            sink(rec);
        }
    }
    return agg;
}

std::string census_csv_header(const CensusOptions& opts) {
    std::string h = "isosig,vertices,tricolourings,c,ts,min_genus,minimal";
    if (opts.depth > 0) h += ",first_ts_depth";
    return h;
}

std::string census_csv_row(const CensusRecord& r, const CensusOptions& opts) {
    std::ostringstream out;
    out << r.isosig << ',';
    if (r.ok) {
        out << r.vertices << ',' << r.n_tc << ',' << r.n_c << ',' << r.n_ts
            << ',';
        if (r.min_genus) out << *r.min_genus;
        out << ',' << (r.minimal ? 1 : 0);
        if (opts.depth > 0) {
            out << ',';
            if (r.first_ts_depth) out << *r.first_ts_depth;
        }
    } else {
        out << ",,,,,error";
        if (opts.depth > 0) out << ',';
    }
    return out.str();
}

}  // namespace trisector
