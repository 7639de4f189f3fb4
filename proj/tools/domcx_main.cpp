// domcx: dominance complexes, Z2 homology, and graph-invariant verification.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "domcx/graph.hpp"
#include "domcx/homology.hpp"
#include "domcx/hypergraph.hpp"
#include "domcx/simplicial_complex.hpp"
#include "domcx/verify.hpp"

namespace fs = std::filesystem;
using namespace domcx;

namespace {

struct InputSpec {
    std::string input_path;
    std::string family;
    int n = 0;
    std::string range;
    int count = 0;
    uint64_t seed = 0;
    double p = 0.5;
};

struct Caps {
    int max_n = 18;
    int max_bowtie_n = 9;
};

uint64_t item_seed(uint64_t seed, int i) {
    return seed * 0x9E3779B97F4A7C15ULL + uint64_t(i) + 1;
}

std::pair<int, int> parse_range(const std::string& range) {
    size_t dots = range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--range wants the form a..b");
    int a = std::stoi(range.substr(0, dots));
    int b = std::stoi(range.substr(dots + 2));
    if (a < 1 || b < a) throw std::invalid_argument("--range wants 1 <= a <= b");
    return {a, b};
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string ln = text.substr(start, end - start);
        if (!ln.empty() && ln.back() == '\r') ln.pop_back();
        lines.push_back(ln);
        start = end + 1;
    }
    return lines;
}

// Graphs from a graph6 file (one per line), an edge-list directory (one per
// file), or a generator family. Parse failures are reported per line and
// counted, not fatal.
std::vector<CorpusItem> gather_graphs(const InputSpec& in, long& parse_errors) {
    std::vector<CorpusItem> items;
    if (!in.input_path.empty()) {
        if (in.input_path != "-" && fs::is_directory(in.input_path)) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(in.input_path))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                try {
                    items.push_back({f.filename().string(), parse_edge_list(read_file(f.string())), {}});
                } catch (const std::exception& e) {
                    ++parse_errors;
                    std::cerr << f.string() << ": " << e.what() << "\n";
                }
            }
            return items;
        }
        auto lines = split_lines(read_file(in.input_path));
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string ln = lines[i];
            if (ln == ">>graph6<<") continue;
            if (ln.empty()) continue;
            try {
                items.push_back({"g6:" + std::to_string(i + 1), parse_graph6(ln), {}});
            } catch (const std::exception& e) {
                ++parse_errors;
                std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            }
        }
        return items;
    }

    const std::string& fam = in.family;
    if (fam.empty()) throw std::invalid_argument("need --input or --family");
    auto sizes = [&]() -> std::vector<int> {
        if (!in.range.empty()) {
            auto [a, b] = parse_range(in.range);
            std::vector<int> out;
            for (int n = a; n <= b; ++n) out.push_back(n);
            return out;
        }
        if (in.n < 1) throw std::invalid_argument("--family " + fam + " wants --n or --range");
        return {in.n};
    };

    auto deterministic = [&](const std::string& name, GraphFamily family) {
        for (int n : sizes())
            items.push_back({name + ":" + std::to_string(n), generate(family, {n, 0, 0}), {}});
    };
    auto randomized = [&](const std::string& name, GraphFamily family,
                          std::optional<KnownFamily> hint) {
        int max_n = in.n > 0 ? in.n : 10;
        int count = in.count > 0 ? in.count : 1;
        for (int i = 0; i < count; ++i) {
            uint64_t s = item_seed(in.seed, i);
            std::mt19937_64 size_rng(s ^ 0xA5A5A5A5A5A5A5A5ULL);
            int n = 1 + int(size_rng() % uint64_t(max_n));
            items.push_back({name + ":n=" + std::to_string(n) + ":seed=" + std::to_string(in.seed) +
                                 "." + std::to_string(i),
                             generate(family, {n, in.p, s}), hint});
        }
    };

    if (fam == "path" || fam == "paths") deterministic("path", GraphFamily::path);
    else if (fam == "cycle" || fam == "cycles") deterministic("cycle", GraphFamily::cycle);
    else if (fam == "complete") deterministic("complete", GraphFamily::complete);
    else if (fam == "star" || fam == "stars") deterministic("star", GraphFamily::star);
    else if (fam == "tree" || fam == "trees")
        randomized("tree", GraphFamily::random_tree, KnownFamily::forest);
    else if (fam == "chordal")
        randomized("chordal", GraphFamily::random_chordal, KnownFamily::chordal);
    else if (fam == "gnp") randomized("gnp", GraphFamily::gnp, {});
    else if (fam == "all-labeled") {
        int n = in.n;
        if (n < 1 || n > 7)
            throw std::invalid_argument("--family all-labeled wants --n in 1..7");
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t(1) << bits); ++mask) {
            Graph g(n);
            int b = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++b)
                    if (mask >> b & 1) g.add_edge(u, v);
            items.push_back({"labeled" + std::to_string(n) + ":" + std::to_string(mask),
                             std::move(g), {}});
        }
    } else {
        throw std::invalid_argument("unknown family '" + fam + "'");
    }
    return items;
}

std::vector<std::pair<std::string, Hypergraph>> gather_hypergraphs(const std::string& path,
                                                                   long& parse_errors) {
    auto lines = split_lines(read_file(path));
    std::vector<std::pair<std::string, Hypergraph>> out;
    size_t i = 0;
    int index = 0;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        std::istringstream hdr(lines[i]);
        int n = -1, m = -1;
        hdr >> n >> m;
        size_t block_len = 1 + size_t(std::max(0, m));
        std::string block;
        for (size_t j = i; j < std::min(lines.size(), i + block_len); ++j) block += lines[j] + "\n";
        ++index;
        try {
            out.emplace_back("hyper:" + std::to_string(index), parse_hypergraph(block));
        } catch (const std::exception& e) {
            ++parse_errors;
            std::cerr << "hypergraph block at line " << i + 1 << ": " << e.what() << "\n";
        }
        i += block_len;
    }
    return out;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << content;
}

std::string opt_str(const std::optional<int>& v, const char* infinity) {
    return v ? std::to_string(*v) : std::string(infinity);
}

SimplicialComplex build_which(const Graph& g, const std::string& which, const Caps& caps,
                              const std::string& id) {
    int n = g.vertex_count();
    auto refuse = [&](int cap, const std::string& flag) {
        throw std::runtime_error("refused: " + id + " has n=" + std::to_string(n) +
                                 ", exceeds " + flag + "=" + std::to_string(cap));
    };
    if (which == "bowtie_ind") {
        if (n > caps.max_bowtie_n) refuse(caps.max_bowtie_n, "--max-bowtie-n");
        return independence_complex(bowtie(g));
    }
    if (n > caps.max_n) refuse(caps.max_n, "--max-n");
    if (which == "dominance") return dominance_complex(g);
    if (which == "dual") return alexander_dual(dominance_complex(g));
    if (which == "suspension_dual") return suspension(alexander_dual(dominance_complex(g)));
    throw std::invalid_argument("unknown --which '" + which + "'");
}

std::string homology_line(const std::string& id, const std::string& which,
                          const SimplicialComplex& k) {
    BettiProfile p = reduced_betti(k);
    std::string line = "id=" + id + " which=" + which + " n=" + std::to_string(k.ground_size()) +
                       " dim=" + std::to_string(p.dim);
    line += " f=";
    for (size_t d = 0; d < p.face_counts.size(); ++d)
        line += (d ? "," : "") + std::to_string(p.face_counts[d]);
    line += " betti[-1..]=";
    for (int d = -1; d <= p.dim; ++d)
        line += (d > -1 ? "," : "") + std::to_string(p.at(d));
    line += " conn=" + opt_str(conn_z2(p), "inf");
    line += " hdim=" + opt_str(hdim_z2(p), "-inf");
    return line + "\n";
}

int default_workers() {
    if (const char* env = std::getenv("DOMCX_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dominance complexes, Z2 homology, and homological-bound verification"};
    app.require_subcommand(1);

    InputSpec in;
    Caps caps;
    std::string out_path;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", in.input_path,
                        "graph6 file ('-' for stdin) or edge-list directory");
        cmd->add_option("--family", in.family,
                        "path|cycle|complete|star|trees|chordal|gnp|all-labeled");
        cmd->add_option("--n", in.n, "size (deterministic families) or max size (random)");
        cmd->add_option("--range", in.range, "size range a..b for deterministic families");
        cmd->add_option("--count", in.count, "number of random graphs");
        cmd->add_option("--seed", in.seed, "random seed");
        cmd->add_option("--p", in.p, "edge probability for gnp");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--max-n", caps.max_n, "largest n for dominance-complex work");
        cmd->add_option("--max-bowtie-n", caps.max_bowtie_n, "largest n for bowtie-complex work");
    };

    auto* inv = app.add_subcommand("invariants", "n, edge count, alpha, tau, min dominating set");
    add_common(inv);

    std::string which = "dominance";
    auto* cpx = app.add_subcommand("complex", "emit a complex in the facet text format");
    add_common(cpx);
    cpx->add_option("--which", which, "dominance|dual|bowtie_ind|suspension_dual");

    bool facet_input = false;
    auto* hom = app.add_subcommand("homology", "Betti profile, conn_Z2, h-dim_Z2");
    add_common(hom);
    hom->add_option("--which", which, "dominance|dual|bowtie_ind|suspension_dual");
    hom->add_flag("--facets", facet_input, "treat --input as facet-format complexes");

    std::string checks_spec = "all";
    std::string hyper_input;
    int workers = default_workers();
    bool no_timings = false;
    auto* ver = app.add_subcommand("verify", "run the homological checks, JSON-lines report");
    add_common(ver);
    ver->add_option("--checks", checks_spec,
                    "comma list: main,noncontr,known,alexander,suspension,free,embed,chain or all");
    ver->add_option("--workers", workers, "worker threads (env DOMCX_WORKERS)");
    ver->add_option("--hyper-input", hyper_input, "hypergraph text file (suspension check only)");
    ver->add_flag("--no-timings", no_timings, "zero the ms fields for byte-stable output");

    CLI11_PARSE(app, argc, argv);

    try {
        long parse_errors = 0;
        std::ostringstream buf;

        if (inv->parsed()) {
            auto items = gather_graphs(in, parse_errors);
            buf << "id\tn\tm\talpha\ttau\tmin_dom\n";
            for (const auto& item : items) {
                int n = item.graph.vertex_count();
                int alpha = max_independent_set(item.graph).count();
                buf << item.id << "\t" << n << "\t" << item.graph.edge_count() << "\t" << alpha
                    << "\t" << n - alpha << "\t";
                if (n >= 1 && n <= caps.max_n)
                    buf << min_dominating_set_size(item.graph);
                else
                    buf << "-";
                buf << "\n";
            }
            write_output(out_path, buf.str());
            return parse_errors ? 2 : 0;
        }

        if (cpx->parsed()) {
            auto items = gather_graphs(in, parse_errors);
            for (const auto& item : items)
                buf << format_facets(build_which(item.graph, which, caps, item.id));
            write_output(out_path, buf.str());
            return parse_errors ? 2 : 0;
        }

        if (hom->parsed()) {
            if (facet_input) {
                if (in.input_path.empty())
                    throw std::invalid_argument("--facets wants --input");
                auto lines = split_lines(read_file(in.input_path));
                size_t i = 0;
                int index = 0;
                while (i < lines.size()) {
                    if (lines[i].empty()) { ++i; continue; }
                    std::istringstream hdr(lines[i]);
                    int n = -1, k = -1;
                    hdr >> n >> k;
                    size_t block_len = 1 + size_t(std::max(0, k));
                    std::string block;
                    for (size_t j = i; j < std::min(lines.size(), i + block_len); ++j)
                        block += lines[j] + "\n";
                    ++index;
                    try {
                        buf << homology_line("complex:" + std::to_string(index), "facets",
                                             parse_facets(block));
                    } catch (const ParseError& e) {
                        ++parse_errors;
                        std::cerr << "facet block at line " << i + 1 << ": " << e.what() << "\n";
                    }
                    i += block_len;
                }
            } else {
                auto items = gather_graphs(in, parse_errors);
                for (const auto& item : items)
                    buf << homology_line(item.id, which, build_which(item.graph, which, caps, item.id));
            }
            write_output(out_path, buf.str());
            return parse_errors ? 2 : 0;
        }

        // verify
        CorpusOptions opt;
        opt.checks = parse_check_list(checks_spec);
        opt.workers = workers;
        opt.max_dominance_n = caps.max_n;
        opt.max_bowtie_n = caps.max_bowtie_n;
        opt.timings = !no_timings;

        long fails = 0;
        if (!hyper_input.empty()) {
            auto hypers = gather_hypergraphs(hyper_input, parse_errors);
            CorpusSummary sum;
            sum.graphs = long(hypers.size());
            for (const auto& [id, h] : hypers) {
                int total = h.n + int(h.edges.size());
                CheckResult r;
                if (total > 2 * opt.max_bowtie_n) {
                    r.name = "bipartite_suspension";
                    r.witness = {{"reason", "n+m exceeds 2*--max-bowtie-n"}, {"n_plus_m", total}};
                } else {
                    auto t0 = std::chrono::steady_clock::now();
                    r = check_bipartite_suspension(h);
                    auto t1 = std::chrono::steady_clock::now();
                    r.ms = opt.timings
                               ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                               : 0.0;
                }
                switch (r.verdict) {
                    case Verdict::pass: ++sum.passes; break;
                    case Verdict::fail: ++sum.fails; break;
                    case Verdict::skip: ++sum.skips; break;
                }
                if (r.ms > sum.worst_ms) { sum.worst_ms = r.ms; sum.worst_id = id; }
                nlohmann::json j{{"id", id}, {"n", h.n},
                                 {"checks", {{r.name, r.to_json()}}}};
                buf << j.dump() << "\n";
            }
            buf << sum.to_json().dump() << "\n";
            fails = sum.fails;
        } else {
            auto items = gather_graphs(in, parse_errors);
            CorpusSummary sum = run_corpus(items, opt, buf);
            fails = sum.fails;
        }
        write_output(out_path, buf.str());
        if (fails) return 1;
        return parse_errors ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
