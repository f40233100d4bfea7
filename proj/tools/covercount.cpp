// Command line surface for the counting library: exact counts, lifts,
// matching gadgets, theorem verification, conjecture search, corpus dumps.
//
// Exit codes: 0 success / claims hold, 1 violation found, 2 usage or parse
// error, 3 resource cap exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "covercount/corpus.hpp"
#include "covercount/count.hpp"
#include "covercount/covers.hpp"
#include "covercount/gadgets.hpp"
#include "covercount/io.hpp"
#include "covercount/oracle.hpp"
#include "covercount/verify.hpp"

namespace {

using namespace covercount;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DegreeVector read_degree_file(const std::string& path, int n) {
    std::istringstream in(read_file(path));
    DegreeVector r;
    int x;
    while (in >> x) r.push_back(x);
    if (static_cast<int>(r.size()) != n)
        throw InputError("degree file has " + std::to_string(r.size()) +
                         " entries, graph has " + std::to_string(n) +
                         " vertices");
    return r;
}

std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Emitted with every run; reproducing the run needs nothing beyond this.
struct Manifest {
    std::string command;
    std::uint64_t seed = 0;
    bool seeded = false;
    std::string corpus_hash;
    std::string start = iso_now();

    json finish() const {
        json j = {{"command", command},
                  {"version", kVersion},
                  {"start", start},
                  {"end", iso_now()}};
        if (seeded) j["seed"] = seed;
        if (!corpus_hash.empty()) j["corpus_spec_hash"] = corpus_hash;
        return j;
    }
};

std::string spec_hash(const CorpusSpec& spec) {
    json j = {{"max_vertices", spec.max_vertices},
              {"max_edges", spec.max_edges},
              {"families", spec.families},
              {"seed", spec.seed},
              {"require_eulerian", spec.require_eulerian},
              {"random_count", spec.random_count}};
    return std::to_string(std::hash<std::string>{}(j.dump()));
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::string serialize_lift(const LiftedGraph& lift) {
    std::ostringstream out;
    out << "base " << lift.base_n << ' ' << lift.base_m << " k " << lift.k
        << '\n';
    out << lift.graph.n << ' ' << lift.graph.edge_count() << '\n';
    for (EdgeId e = 0; e < lift.graph.edge_count(); ++e)
        out << lift.graph.edges[e].first << ' ' << lift.graph.edges[e].second
            << ' ' << lift.projection[e] << '\n';
    return out.str();
}

void write_output(const json& j, const std::string& out_path) {
    std::cout << j.dump(2) << '\n';
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << j.dump(2) << '\n';
    }
}

struct VerifyArgs {
    std::string claim;
    std::string graph_file;
    bool use_corpus = false;
    CorpusSpec spec;
    std::uint64_t seed = 0;
    bool seeded = false;
    int threads = 1;
    int lieb_n = 3, lieb_m = 3;
};

std::vector<CorpusGraph> load_targets(const VerifyArgs& a) {
    if (a.use_corpus) return generate_corpus(a.spec);
    if (a.graph_file.empty())
        throw InputError("either --graph or --corpus is required");
    ParsedGraph pg = parse_graph(read_file(a.graph_file));
    return {{a.graph_file, pg.graph}};
}

int run_verify(const VerifyArgs& a, Manifest& manifest) {
    std::vector<VerificationReport> reports;
    const bool randomized = a.claim == "cover-orient" ||
                            a.claim == "cover-factor" ||
                            a.claim == "mixed-identity";
    if (randomized && !a.seeded)
        throw InputError("--seed is required for claim " + a.claim);

    if (a.claim == "lieb") {
        reports.push_back(check_lieb_bound(a.lieb_n, a.lieb_m));
    } else {
        for (const auto& [name, g] : load_targets(a)) {
            std::cerr << "checking " << a.claim << " on " << name << "\n";
            if (a.claim == "recursion") {
                reports.push_back(check_recursion(g, a.threads));
            } else if (a.claim == "inequality") {
                reports.push_back(check_inequality(g));
            } else if (a.claim == "bipartite-cover") {
                reports.push_back(check_bipartite_cover(g, a.threads));
            } else if (a.claim == "cover-orient" || a.claim == "cover-factor") {
                auto half = half_degrees(g);
                if (!half) throw InputError("graph must have even degrees");
                auto signings = signing_sweep(g, a.seed);
                reports.push_back(a.claim == "cover-orient"
                                      ? check_cover_orientation_max(g, *half, signings)
                                      : check_cover_factor_max(g, *half, signings));
            } else if (a.claim == "mixed-identity") {
                SplitMix64 rng = derive_stream(a.seed, 0);
                Signing s = random_signing(g, rng);
                Decoration dec(g.edge_count());
                for (auto& role : dec) role = rng.coin() ? Role::S : Role::O;
                reports.push_back(check_mixed_identity(g, s, dec, a.threads));
            } else if (a.claim == "mixed-inequality") {
                for (const Decoration& dec :
                     {Decoration(g.edge_count(), Role::O),
                      Decoration(g.edge_count(), Role::S)})
                    reports.push_back(check_mixed_inequality(g, dec));
            } else if (a.claim == "balanced-max") {
                reports.push_back(check_balanced_max(g));
            } else if (a.claim == "reversal") {
                auto half = half_degrees(g);
                if (!half) throw InputError("graph must have even degrees");
                reports.push_back(check_reversal_and_decomposition(g, *half));
            } else {
                throw CLI::ValidationError("unknown claim: " + a.claim);
            }
            reports.back().graph = name;
        }
    }

    canonicalize_reports(reports);
    bool violated = false;
    json out_reports = json::array();
    for (const auto& r : reports) {
        violated |= r.status == Status::Violated;
        out_reports.push_back(report_to_json(r));
    }
    write_output({{"reports", out_reports}, {"manifest", manifest.finish()}}, "");
    return violated ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of Eulerian orientations, half graphs and "
                 "their cover identities"};
    app.require_subcommand(1);

    Manifest manifest;
    manifest.command = join_args(argc, argv);

    // count
    auto* count = app.add_subcommand("count", "count one quantity of a graph");
    std::string count_graph, count_what, count_r_file;
    bool count_oracle = false;
    int threads = 1;
    count->add_option("--graph", count_graph)->required();
    count->add_option("--what", count_what)
        ->required()
        ->check(CLI::IsMember({"eulerian", "half", "g", "r-orient", "r-factor"}));
    count->add_option("--r", count_r_file);
    count->add_flag("--oracle", count_oracle);
    count->add_option("--threads", threads);

    // lift
    auto* lift = app.add_subcommand("lift", "build a 2-lift or k-lift");
    std::string lift_graph, lift_perms, lift_out;
    int lift_k = 2;
    std::uint64_t lift_seed = 0;
    bool lift_seeded = false;
    lift->add_option("--graph", lift_graph)->required();
    lift->add_option("--k", lift_k);
    lift->add_option("--perms", lift_perms);
    lift->add_option("--seed", lift_seed)->each([&](const std::string&) {
        lift_seeded = true;
    });
    lift->add_option("--out", lift_out);

    // gadget
    auto* gadget = app.add_subcommand("gadget", "build a matching gadget");
    std::string gadget_graph, gadget_which, gadget_r_file;
    gadget->add_option("--graph", gadget_graph)->required();
    gadget->add_option("--which", gadget_which)
        ->required()
        ->check(CLI::IsMember({"star", "doublestar"}));
    gadget->add_option("--r", gadget_r_file);

    // verify
    auto* verify = app.add_subcommand("verify", "check one claim");
    VerifyArgs va;
    verify->add_option("--claim", va.claim)->required();
    verify->add_option("--graph", va.graph_file);
    verify->add_flag("--corpus", va.use_corpus);
    verify->add_option("--max-vertices", va.spec.max_vertices);
    verify->add_option("--max-edges", va.spec.max_edges);
    verify->add_option("--seed", va.seed)->each([&](const std::string&) {
        va.seeded = true;
    });
    verify->add_option("--threads", va.threads);
    verify->add_option("--n", va.lieb_n);
    verify->add_option("--m", va.lieb_m);

    // search
    auto* search = app.add_subcommand("search", "random k-lift conjecture search");
    std::string search_graph;
    bool search_corpus = false;
    int search_k = 3, search_trials = 100;
    std::uint64_t search_seed = 0;
    bool search_seeded = false;
    int search_max_edges = 12;
    search->add_option("--graph", search_graph);
    search->add_flag("--corpus", search_corpus);
    search->add_option("--k", search_k);
    search->add_option("--trials", search_trials);
    search->add_option("--seed", search_seed)->each([&](const std::string&) {
        search_seeded = true;
    });
    search->add_option("--max-edges", search_max_edges);

    // corpus
    auto* corpus = app.add_subcommand("corpus", "emit the test corpus");
    CorpusSpec cspec;
    std::string corpus_out;
    std::uint64_t corpus_seed = 0;
    bool corpus_seeded = false;
    corpus->add_option("--max-vertices", cspec.max_vertices);
    corpus->add_option("--max-edges", cspec.max_edges);
    corpus->add_option("--random-count", cspec.random_count);
    corpus->add_option("--seed", corpus_seed)->each([&](const std::string&) {
        corpus_seeded = true;
    });
    corpus->add_option("--out", corpus_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) {
            ParsedGraph pg = parse_graph(read_file(count_graph));
            const Multigraph& g = pg.graph;
            BigCount result;
            if (count_what == "eulerian") {
                result = count_oracle
                             ? brute_force_count(g, CountKind::EulerianOrientations)
                             : count_eulerian_orientations(g);
            } else if (count_what == "half") {
                result = count_oracle
                             ? brute_force_count(g, CountKind::HalfGraphs)
                             : count_half_graphs(g);
            } else if (count_what == "g") {
                Decoration dec = pg.decoration.value_or(
                    Decoration(g.edge_count(), Role::O));
                result = count_oracle
                             ? brute_force_count(
                                   g, CountKind::BalancedFactorientations, {}, dec)
                             : count_balanced_factorientations(g, dec);
            } else {
                if (count_r_file.empty())
                    throw InputError("--r is required for " + count_what);
                DegreeVector r = read_degree_file(count_r_file, g.n);
                if (count_what == "r-orient")
                    result = count_oracle
                                 ? brute_force_count(g, CountKind::ROrientations, r)
                                 : count_r_orientations(g, r);
                else
                    result = count_oracle
                                 ? brute_force_count(g, CountKind::RFactors, r)
                                 : count_r_factors(g, r);
            }
            write_output({{"count", to_decimal(result)},
                          {"manifest", manifest.finish()}},
                         "");
            return 0;
        }

        if (*lift) {
            ParsedGraph pg = parse_graph(read_file(lift_graph));
            LiftedGraph lifted;
            if (!lift_perms.empty()) {
                json pj = json::parse(read_file(lift_perms));
                LiftPermutations p;
                p.k = pj.at("k").get<int>();
                for (const auto& pi : pj.at("perms"))
                    p.perms.push_back(pi.get<std::vector<int>>());
                lifted = build_klift(pg.graph, p);
            } else if (lift_k == 2 && pg.signing) {
                lifted = build_2lift(pg.graph, *pg.signing);
            } else {
                if (!lift_seeded)
                    throw InputError("--seed is required for a random lift");
                manifest.seed = lift_seed;
                manifest.seeded = true;
                lifted = build_klift(pg.graph,
                                     random_klift(pg.graph, lift_k, lift_seed));
            }
            std::string text = serialize_lift(lifted);
            if (!lift_out.empty()) {
                std::ofstream f(lift_out, std::ios::binary);
                f << text;
            }
            write_output({{"lift", text}, {"manifest", manifest.finish()}}, "");
            return 0;
        }

        if (*gadget) {
            ParsedGraph pg = parse_graph(read_file(gadget_graph));
            DegreeVector r;
            if (!gadget_r_file.empty()) {
                r = read_degree_file(gadget_r_file, pg.graph.n);
            } else {
                auto half = half_degrees(pg.graph);
                if (!half)
                    throw InputError("graph has odd degrees; pass --r explicitly");
                r = *half;
            }
            json j;
            if (gadget_which == "star") {
                auto [b, map] = build_schrijver_star(pg.graph, r);
                j = gadget_to_json(b, map);
            } else {
                auto [g2, map] = build_tutte_doublestar(pg.graph, r);
                j = gadget_to_json(g2, map);
            }
            write_output({{"gadget", j}, {"manifest", manifest.finish()}}, "");
            return 0;
        }

        if (*verify) {
            manifest.seed = va.seed;
            manifest.seeded = va.seeded;
            if (va.use_corpus) {
                va.spec.seed = va.seed;
                manifest.corpus_hash = spec_hash(va.spec);
            }
            return run_verify(va, manifest);
        }

        if (*search) {
            if (!search_seeded)
                throw InputError("--seed is required for search");
            manifest.seed = search_seed;
            manifest.seeded = true;
            std::vector<CorpusGraph> targets;
            if (search_corpus) {
                CorpusSpec spec;
                spec.max_edges = search_max_edges;
                spec.seed = search_seed;
                manifest.corpus_hash = spec_hash(spec);
                targets = generate_corpus(spec);
            } else {
                if (search_graph.empty())
                    throw InputError("either --graph or --corpus is required");
                targets = {{search_graph,
                            parse_graph(read_file(search_graph)).graph}};
            }
            std::vector<VerificationReport> reports;
            for (size_t i = 0; i < targets.size(); ++i) {
                std::cerr << "searching on " << targets[i].name << "\n";
                VerificationReport r = search_conjecture(
                    targets[i].graph, search_k, search_trials,
                    search_seed + 1000003 * i);
                r.graph = targets[i].name;
                reports.push_back(std::move(r));
            }
            canonicalize_reports(reports);
            bool violated = false;
            json arr = json::array();
            for (const auto& r : reports) {
                violated |= r.status == Status::Violated;
                arr.push_back(report_to_json(r));
            }
            write_output({{"reports", arr}, {"manifest", manifest.finish()}}, "");
            return violated ? 1 : 0;
        }

        if (*corpus) {
            if (cspec.has("random") && !corpus_seeded)
                throw InputError("--seed is required when the corpus includes "
                                 "random graphs");
            cspec.seed = corpus_seed;
            manifest.seed = corpus_seed;
            manifest.seeded = corpus_seeded;
            manifest.corpus_hash = spec_hash(cspec);
            auto graphs = generate_corpus(cspec);
            json listing = json::array();
            for (const auto& [name, g] : graphs) {
                listing.push_back({{"name", name},
                                   {"vertices", g.n},
                                   {"edges", g.edge_count()}});
                if (!corpus_out.empty()) {
                    std::filesystem::create_directories(corpus_out);
                    std::ofstream f(std::filesystem::path(corpus_out) /
                                        (name + ".graph"),
                                    std::ios::binary);
                    f << serialize_graph(g);
                }
            }
            write_output({{"graphs", listing}, {"manifest", manifest.finish()}},
                         "");
            return 0;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
