#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "trisector/census.hpp"
#include "trisector/face_lattice.hpp"
#include "trisector/homology.hpp"
#include "trisector/isosig.hpp"
#include "trisector/search.hpp"
#include "trisector/trisect.hpp"

using json = nlohmann::ordered_json;
using namespace trisector;

namespace {

// Exit codes: 0 success, 1 usage error (CLI11), 2 bad input data.
constexpr int kExitData = 2;

json type_json(const TrisectionType& t) {
    return json::array({t.genus, t.handlebody_genera[0], t.handlebody_genera[1],
                        t.handlebody_genera[2]});
}

std::string betti_str(const std::array<long, 5>& b) {
    std::ostringstream out;
    out << '(' << b[0] << ", " << b[1] << ", " << b[2] << ", " << b[3] << ", "
        << b[4] << ')';
    return out.str();
}

struct Analysed {
    Triangulation tri;
    FaceLattice lattice;
    TriangulationAnalysis analysis;
};

Analysed analyse(const std::string& sig) {
    Analysed a{decode_isosig(sig), FaceLattice{}, {}};
    if (!a.tri.is_closed())
        throw std::invalid_argument("triangulation is not closed");
    a.lattice = build_face_lattice(a.tri);
    a.analysis = analyze_triangulation(a.tri, a.lattice);
    return a;
}

int run_info(const std::string& sig, const std::string& format) {
    Triangulation t = decode_isosig(sig);
    if (!t.is_closed())
        throw std::invalid_argument("triangulation is not closed");
    FaceLattice lat = build_face_lattice(t);
    const auto f = lat.f_vector();
    const auto betti = betti_z2(lat);
    const bool orientable = is_orientable(t);
    const long bound = trisection_genus_lower_bound(t, lat);
    if (format == "json") {
        json out;
        out["isosig"] = encode_isosig(t);
        out["pentachora"] = t.size();
        out["f"] = f;
        out["chi"] = lat.euler_characteristic();
        out["orientable"] = orientable;
        out["betti"] = betti;
        out["lower_bound"] = bound;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "signature   : " << sig << '\n'
                  << "pentachora  : " << t.size() << '\n'
                  << "f-vector    : " << betti_str(f) << '\n'
                  << "euler       : " << lat.euler_characteristic() << '\n'
                  << "orientable  : " << (orientable ? "yes" : "no") << '\n'
                  << "betti (Z/2) : " << betti_str(betti) << '\n'
                  << "lower bound : " << bound << '\n';
    }
    return 0;
}

std::string colour_string(const Tricolouring& c) {
    std::string s;
    for (uint8_t k : c.colour) s += static_cast<char>('0' + k);
    return s;
}

int run_trisect(const std::string& sig, bool all, const std::string& format) {
    Analysed a = analyse(sig);
    const TriangulationAnalysis& an = a.analysis;
    if (format == "json") {
        json out;
        out["isosig"] = encode_isosig(a.tri);
        out["orientable"] = an.orientable;
        out["betti"] = an.betti;
        out["lower_bound"] = an.lower_bound;
        out["n_tc"] = an.n_tc;
        out["n_c"] = an.n_c;
        out["n_ts"] = an.n_ts;
        json trisections = json::array();
        json failures = json::array();
        for (const auto& r : an.reports) {
            if (r.level == Level::ts_tricolouring) {
                trisections.push_back(
                    {{"genus", r.type->genus},
                     {"handlebody_genera",
                      json::array({r.type->handlebody_genera[0],
                                   r.type->handlebody_genera[1],
                                   r.type->handlebody_genera[2]})},
                     {"minimal", r.minimal}});
            } else {
                failures.push_back(r.failure);
            }
        }
        out["trisections"] = trisections;
        out["failures"] = failures;
        if (all) {
            json details = json::array();
            for (std::size_t i = 0; i < an.reports.size(); ++i) {
                const auto& r = an.reports[i];
                json d;
                d["colours"] = colour_string(an.tricolourings[i]);
                switch (r.level) {
                    case Level::ts_tricolouring: d["level"] = "ts"; break;
                    case Level::c_tricolouring: d["level"] = "c"; break;
                    default: d["level"] = "tc"; break;
                }
                if (r.level == Level::ts_tricolouring) {
                    d["type"] = type_json(*r.type);
                    d["surface_orientable"] = r.surface_orientable;
                    d["minimal"] = r.minimal;
                } else {
                    d["failure"] = r.failure;
                }
                details.push_back(d);
            }
            out["tricolourings"] = details;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "signature    : " << sig << '\n'
                  << "orientable   : " << (an.orientable ? "yes" : "no") << '\n'
                  << "betti (Z/2)  : " << betti_str(an.betti) << '\n'
                  << "lower bound  : " << an.lower_bound << '\n'
                  << "tricolourings: " << an.n_tc << "   c: " << an.n_c
                  << "   ts: " << an.n_ts << '\n';
        if (!an.ts_types.empty()) {
            std::cout << "trisections  :\n";
            for (const auto& [ty, cnt] : an.ts_types) {
                std::cout << "  " << ty.str() << "  x" << cnt;
                // minimal when some report with this type is minimal
                for (const auto& r : an.reports)
                    if (r.level == Level::ts_tricolouring && *r.type == ty &&
                        r.minimal) {
                        std::cout << "  minimal";
                        break;
                    }
                std::cout << '\n';
            }
        }
        if (all) {
            std::cout << "colourings   :\n";
            for (std::size_t i = 0; i < an.reports.size(); ++i) {
                const auto& r = an.reports[i];
                std::cout << "  " << colour_string(an.tricolourings[i]) << "  ";
                if (r.level == Level::ts_tricolouring)
                    std::cout << "ts " << r.type->str()
                              << (r.minimal ? "  minimal" : "");
                else
                    std::cout << (r.level == Level::c_tricolouring ? "c   "
                                                                   : "tc  ")
                              << r.failure;
                std::cout << '\n';
            }
        }
    }
    return 0;
}

int run_search(const std::string& sig, int depth, std::size_t nodeCap, int jobs,
               const std::string& format) {
    Triangulation t = decode_isosig(sig);
    if (!t.is_closed())
        throw std::invalid_argument("triangulation is not closed");
    SearchOptions opts;
    opts.max_depth = depth;
    opts.node_cap = nodeCap;
    opts.jobs = jobs;
    OrbitResult r = search_supported_trisections(t, opts);
    if (format == "json") {
        json out;
        out["root"] = r.root;
        out["max_depth"] = r.max_depth;
        out["node_cap"] = nodeCap;
        out["truncated"] = r.truncated;
        out["nodes_visited"] = r.nodes_visited;
        json per = json::array();
        for (const auto& d : r.depths) {
            json types = json::array();
            for (const auto& ty : d.types) types.push_back(type_json(ty));
            per.push_back(
                {{"depth", d.depth}, {"nodes", d.nodes}, {"types", types}});
        }
        out["per_depth"] = per;
        out["first_ts_depth"] =
            r.first_ts_depth ? json(*r.first_ts_depth) : json(nullptr);
        out["min_type"] = r.min_type ? type_json(*r.min_type) : json(nullptr);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "root        : " << r.root << '\n';
        for (const auto& d : r.depths) {
            std::cout << "depth " << d.depth << "     : " << d.nodes
                      << (d.nodes == 1 ? " node" : " nodes");
            if (!d.types.empty()) {
                std::cout << "   types:";
                for (const auto& ty : d.types) std::cout << ' ' << ty.str();
            }
            std::cout << '\n';
        }
        if (r.truncated) std::cout << "truncated   : yes (node cap reached)\n";
        std::cout << "first ts    : ";
        if (r.first_ts_depth)
            std::cout << "depth " << *r.first_ts_depth << '\n';
        else
            std::cout << "none within depth " << r.max_depth << '\n';
        if (r.min_type) std::cout << "min type    : " << r.min_type->str() << '\n';
    }
    return 0;
}

int run_census(const std::string& file, int jobs, int depth, std::size_t nodeCap,
               const std::string& outCsv, const std::string& format) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << '\n';
        return kExitData;
    }
    CensusOptions opts;
    opts.jobs = jobs;
    opts.depth = depth;
    opts.node_cap = nodeCap;

    std::ofstream csvFile;
    std::ostream* csv = nullptr;
    if (!outCsv.empty()) {
        if (outCsv == "-") {
            csv = &std::cout;
        } else {
            csvFile.open(outCsv);
            if (!csvFile) {
                std::cerr << "error: cannot write " << outCsv << '\n';
                return kExitData;
            }
            csv = &csvFile;
        }
        *csv << census_csv_header(opts) << '\n';
    }
    CensusAggregate agg =
        scan_census(in, opts, [&](const CensusRecord& r) {
            if (csv) *csv << census_csv_row(r, opts) << '\n';
        });

    if (format == "json") {
        json out;
        out["records"] = agg.records;
        out["decode_errors"] = agg.decode_errors;
        out["triangulations"] = agg.triangulations;
        out["at_least_3_vertices"] = agg.at_least_3_vertices;
        out["no_small_triangles"] = agg.no_small_triangles;
        out["tricolourable"] = agg.tricolourable;
        out["with_c"] = agg.with_c;
        out["with_ts"] = agg.with_ts;
        out["tricolourings"] = agg.tricolourings;
        out["c_tricolourings"] = agg.c_tricolourings;
        out["ts_tricolourings"] = agg.ts_tricolourings;
        json hist = json::array();
        for (const auto& [k, row] : agg.histogram)
            hist.push_back({{"k", k},
                            {"tricolourings", row[0]},
                            {"c", row[1]},
                            {"ts", row[2]}});
        out["histogram"] = hist;
        std::cout << out.dump(2) << '\n';
    } else {
        std::ostream& o = (csv == &std::cout) ? std::cerr : std::cout;
        o << "records            : " << agg.records << '\n'
          << "decode errors      : " << agg.decode_errors << '\n'
          << "triangulations     : " << agg.triangulations << '\n'
          << ">= 3 vertices      : " << agg.at_least_3_vertices << '\n'
          << "triangle screen    : " << agg.no_small_triangles << '\n'
          << "tricolourable      : " << agg.tricolourable << "  ("
          << agg.tricolourings << " tricolourings)\n"
          << "c-supporting       : " << agg.with_c << "  ("
          << agg.c_tricolourings << " c-tricolourings)\n"
          << "ts-supporting      : " << agg.with_ts << "  ("
          << agg.ts_tricolourings << " ts-tricolourings)\n";
        if (!agg.histogram.empty()) {
            o << "histogram  k : #tc=k  #c=k  #ts=k\n";
            for (const auto& [k, row] : agg.histogram)
                o << "  " << k << " : " << row[0] << "  " << row[1] << "  "
                  << row[2] << '\n';
        }
    }
    return 0;
}

json gluings_json(const Triangulation& t) {
    json gluings = json::array();
    for (int p = 0; p < t.size(); ++p) {
        json row = json::array();
        for (int f = 0; f < 5; ++f) {
            if (!t.is_glued(p, f)) {
                row.push_back(nullptr);
            } else {
                const Gluing& g = t.adjacent(p, f);
                json perm = json::array();
                for (int i = 0; i < 5; ++i) perm.push_back(g.map[i]);
                row.push_back({{"pent", g.pent}, {"perm", perm}});
            }
        }
        gluings.push_back(row);
    }
    return gluings;
}

int run_decode(const std::string& sig, bool withLattice) {
    Triangulation t = decode_isosig(sig);
    json out;
    out["pentachora"] = t.size();
    out["gluings"] = gluings_json(t);
    if (withLattice) {
        FaceLattice lat = build_face_lattice(t);
        json lattice = json::array();
        for (int dim = 0; dim < 4; ++dim) {
            json classes = json::array();
            for (long id = 0; id < lat.count(dim); ++id) {
                json inc = json::array();
                for (const auto& [pent, mask] : lat.face(dim, id).incidences)
                    inc.push_back({{"pent", pent}, {"corners", mask}});
                classes.push_back(inc);
            }
            lattice.push_back({{"dim", dim}, {"classes", classes}});
        }
        out["lattice"] = lattice;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_encode(const std::string& file) {
    json in;
    if (file == "-") {
        std::cin >> in;
    } else {
        std::ifstream f(file);
        if (!f) {
            std::cerr << "error: cannot open " << file << '\n';
            return kExitData;
        }
        f >> in;
    }
    const int n = in.at("pentachora").get<int>();
    if (n < 0) throw std::invalid_argument("negative pentachoron count");
    Triangulation t(n);
    const json& gluings = in.at("gluings");
    if (static_cast<int>(gluings.size()) != n)
        throw std::invalid_argument("gluings row count != pentachora");
    for (int p = 0; p < n; ++p) {
        const json& row = gluings.at(p);
        if (row.size() != 5)
            throw std::invalid_argument("each pentachoron needs 5 entries");
        for (int f = 0; f < 5; ++f) {
            const json& cell = row.at(f);
            if (cell.is_null()) continue;
            const int q = cell.at("pent").get<int>();
            const json& perm = cell.at("perm");
            if (q < 0 || q >= n) throw std::invalid_argument("pent out of range");
            if (perm.size() != 5)
                throw std::invalid_argument("perm needs 5 images");
            Perm5 map(perm.at(0).get<int>(), perm.at(1).get<int>(),
                      perm.at(2).get<int>(), perm.at(3).get<int>(),
                      perm.at(4).get<int>());
            if (t.is_glued(p, f)) {
                const Gluing& g = t.adjacent(p, f);
                if (g.pent != q || !(g.map == map))
                    throw std::invalid_argument(
                        "gluing table is not an involution");
                continue;
            }
            t.join(p, f, q, map);
        }
    }
    t.validate();
    std::cout << encode_isosig(t) << '\n';
    return 0;
}

std::string sha256_hex(const std::string& path, std::string& error) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        error = "cannot open " + path;
        return {};
    }
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 16);
    while (f) {
        f.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(f.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

int run_fetch(const std::string& verify, std::string sha) {
    std::cout <<
        "The census files are published by their authors and are not bundled\n"
        "with this tool.\n"
        "\n"
        "  * Closed orientable 4-manifold triangulations with up to six\n"
        "    pentachora (440 495 signatures), by Budney and Burton.\n"
        "  * Closed non-orientable 4-manifold triangulations with six\n"
        "    pentachora (60 413 signatures).\n"
        "\n"
        "Both are distributed alongside the Regina project\n"
        "(https://regina-normal.github.io) and on the authors' pages; the\n"
        "files are plain text with one isomorphism signature per line,\n"
        "which `trisector census` reads directly.\n";
    if (verify.empty()) return 0;
    std::string error;
    const std::string got = sha256_hex(verify, error);
    if (got.empty()) {
        std::cerr << "error: " << error << '\n';
        return kExitData;
    }
    for (char& ch : sha) ch = static_cast<char>(std::tolower(ch));
    std::cout << "\nsha256(" << verify << ") = " << got << '\n';
    if (sha.empty()) return 0;
    if (got == sha) {
        std::cout << "checksum OK\n";
        return 0;
    }
    std::cout << "checksum MISMATCH (expected " << sha << ")\n";
    return kExitData;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trisections of closed 4-manifolds from singular "
                 "pentachoron triangulations"};
    app.require_subcommand(1);
    std::string format = "table";

    std::string sig, file, outCsv, verifyFile, sha;
    bool all = false, lattice = false;
    int depth = 3, censusDepth = 0, jobs = 0;
    std::size_t nodeCap = 100000;

    auto addFormat = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* info = app.add_subcommand("info", "Summarize one triangulation");
    info->add_option("sig", sig, "isomorphism signature")->required();
    addFormat(info);

    CLI::App* trisect =
        app.add_subcommand("trisect", "Analyse every tricolouring");
    trisect->add_option("sig", sig, "isomorphism signature")->required();
    trisect->add_flag("--all", all, "report every tricolouring, not only ts");
    addFormat(trisect);

    CLI::App* search =
        app.add_subcommand("search", "Explore the 2-4-move orbit");
    search->add_option("sig", sig, "isomorphism signature")->required();
    search->add_option("--depth", depth, "maximum number of moves");
    search->add_option("--node-cap", nodeCap, "visited-triangulation cap");
    search->add_option("--jobs", jobs, "worker threads (0: auto)");
    addFormat(search);

    CLI::App* census =
        app.add_subcommand("census", "Scan a file of signatures");
    census->add_option("file", file, "one signature per line")->required();
    census->add_option("--jobs", jobs, "worker threads (0: auto)");
    census->add_option("--depth", censusDepth,
                       "also search each record to this depth");
    census->add_option("--node-cap", nodeCap, "per-record search cap");
    census->add_option("--out", outCsv, "per-record CSV path ('-': stdout)");
    addFormat(census);

    CLI::App* decode =
        app.add_subcommand("decode", "Dump the gluing table as JSON");
    decode->add_option("sig", sig, "isomorphism signature")->required();
    decode->add_flag("--lattice", lattice, "include the face lattice");

    CLI::App* encode = app.add_subcommand(
        "encode", "Canonical signature from a JSON gluing table");
    encode->add_option("file", file, "JSON file ('-': stdin)")->required();

    CLI::App* fetch = app.add_subcommand(
        "fetch", "Where to obtain the census files; verify a checksum");
    fetch->add_option("--verify", verifyFile, "file to hash");
    fetch->add_option("--sha256", sha, "expected hex digest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // A signature of "-" means "read it from stdin" — convenient for
    // long signatures and for those that begin with '-', which the
    // option parser would otherwise eat (`-- <sig>` also works).
    if (sig == "-") std::cin >> sig;

    try {
        if (*info) return run_info(sig, format);
        if (*trisect) return run_trisect(sig, all, format);
        if (*search) return run_search(sig, depth, nodeCap, jobs, format);
        if (*census)
            return run_census(file, jobs, censusDepth, nodeCap, outCsv, format);
        if (*decode) return run_decode(sig, lattice);
        if (*encode) return run_encode(file);
        if (*fetch) return run_fetch(verifyFile, sha);
    } catch (const IsoSigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
