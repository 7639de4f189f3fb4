#ifndef DOMCX_VERIFY_HPP
#define DOMCX_VERIFY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domcx/graph.hpp"
#include "domcx/homology.hpp"
#include "domcx/hypergraph.hpp"
#include "domcx/simplicial_complex.hpp"

namespace domcx {

enum class Verdict { pass, fail, skip };

const char* verdict_name(Verdict v);

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::skip;
    nlohmann::json data;     // the numbers the check compared; never empty on pass
    nlohmann::json witness;  // violating set/face/dimension on fail, reason on skip
    double ms = 0.0;

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    nlohmann::json to_json() const;
};

enum class KnownFamily { forest, chordal, cycle };

const char* family_name(KnownFamily f);

// --- family detection ---------------------------------------------------------

bool is_forest(const Graph& g);
bool is_chordal_graph(const Graph& g);   // simplicial elimination
bool is_cycle_graph(const Graph& g);     // connected and 2-regular
std::optional<KnownFamily> detect_family(const Graph& g);

// --- per-graph checks -----------------------------------------------------

// conn_Z2(D(G)) + 2 <= tau(G); records the gap. A Z2-acyclic dominance
// complex is reported as a falsification, never a pass.
CheckResult check_cover_bound(const Graph& g);

// Some reduced Z2 Betti number of D(G) is nonzero.
CheckResult check_noncontractible(const Graph& g);

// Regression against the known homotopy types: forests and chordal graphs
// give one sphere class in dimension tau-1 (EMPTY when tau = 0), cycles give
// the wedge formulas. If `claimed` is given the graph must match it;
// otherwise the family is detected. No known family -> skip.
CheckResult check_known_type(const Graph& g, std::optional<KnownFamily> claimed = {});

// Reduced Betti reflection of the combinatorial Alexander dual:
// betti_i(K^v) = betti_{n-i-3}(K) for all i. VOID and full simplexes skip.
CheckResult check_alexander(const SimplicialComplex& k);

// Suspension of the dual of I(H) against I(B_H), compared in every
// dimension. Hypergraphs with no or empty hyperedges skip.
CheckResult check_bipartite_suspension(const Hypergraph& h);

// The bowtie involution acts freely on I(G^bowtie).
CheckResult check_free_action(const Graph& g);

// The cross-polytope boundary on a maximum independent set embeds
// simplicially and equivariantly into I(G^bowtie).
CheckResult check_sphere_embedding(const Graph& g);

// The homological inequality chain: alpha-1 <= hdim I(G^bowtie),
// hdim I(G^bowtie) = hdim of the suspended dual of D(G) = n - k - 3.
CheckResult check_inequality_chain(const Graph& g);

// --- corpus runner ---------------------------------------------------------

enum class CheckKind {
    cover_bound,
    noncontractible,
    known_types,
    alexander_duality,
    bipartite_suspension,
    free_action,
    sphere_embedding,
    chain,
};

const char* check_kind_name(CheckKind k);
std::vector<CheckKind> all_check_kinds();

// Accepts canonical names and the CLI shorthands (main, noncontr, known,
// alexander, suspension, free, embed, chain, all).
std::vector<CheckKind> parse_check_list(const std::string& spec);

struct CorpusItem {
    std::string id;
    Graph graph;
    std::optional<KnownFamily> family;  // generator hint for known_types
};

struct CorpusOptions {
    std::vector<CheckKind> checks = all_check_kinds();
    int workers = 1;
    int max_dominance_n = 18;  // checks that build D(G)
    int max_bowtie_n = 9;      // checks that build I(G^bowtie)
    bool timings = true;       // false zeroes the ms fields for byte-stable output
};

struct GraphReport {
    std::string id;
    int n = 0;
    int alpha = 0;
    int tau = 0;
    nlohmann::json conn_d;       // integer or "inf"; null when no check computed it
    nlohmann::json hdim_bowtie;  // integer or "-inf"; null when no check computed it
    std::vector<CheckResult> checks;

    nlohmann::json to_json() const;
};

struct CorpusSummary {
    long graphs = 0;
    long passes = 0;
    long fails = 0;
    long skips = 0;
    long max_gap = -1;
    std::string max_gap_id;
    double worst_ms = 0.0;
    std::string worst_id;

    nlohmann::json to_json() const;
};

GraphReport evaluate_item(const CorpusItem& item, const CorpusOptions& opt);

// Runs the selected checks per graph across a worker pool, writes one JSON
// report line per item (input order) followed by the aggregate summary line.
CorpusSummary run_corpus(const std::vector<CorpusItem>& items, const CorpusOptions& opt,
                         std::ostream& out);

}  // namespace domcx

#endif
