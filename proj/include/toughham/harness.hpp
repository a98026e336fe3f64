#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toughham/corpus.hpp"
#include "toughham/replay.hpp"

namespace toughham {

using nlohmann::json;

// Full invariant record for one graph: every hypothesis/conclusion slot
// the campaigns filter on.
struct PropertyProfile {
    std::string graph6;
    int n = 0;
    int m = 0;
    int delta = 0;
    int kappa = 0;
    int alpha = 0;
    std::optional<Rational> tau;  // nullopt = infinite
    bool hamiltonian = false;
    std::map<int, bool> freeness;
    std::map<std::string, double> timings_ms;
};

PropertyProfile profile(const Graph& g, const std::vector<int>& ks,
                        const SolverCaps& caps = default_caps());

json profile_json(const PropertyProfile& p, bool with_timings = true);
json certificate_json(const Certificate& cert);
json outcome_json(const ReplayOutcome& outcome);
std::string rational_str(const std::optional<Rational>& r);  // "p/q" or "inf"

// --- data-parallel kernels --------------------------------------------
//
// Campaign work is a pure per-index loop. The OpenMP kernel is what the
// CLI runs; the serial loop is the reference implementation the tests
// (and the benchmark) compare it against. Both fill the same slots, so
// output is independent of jobs.

void serial_for_index(long count, const std::function<void(long)>& fn);
void parallel_for_index(long count, int jobs, const std::function<void(long)>& fn);

// ------------------------------------------------------------------------

struct GraphRecord {
    long seq = 0;
    json payload;           // deterministic given (corpus, seed, caps)
    double elapsed_ms = 0;  // excluded from determinism comparisons
};

struct CampaignReport {
    std::string campaign;
    json corpus_desc;
    long scanned = 0;
    long hypothesis_satisfying = 0;
    long conclusion_holds = 0;
    long violations = 0;
    std::vector<GraphRecord> records;
    std::vector<long> violation_seqs;
    json extra;
    double wall_ms = 0;
    std::string status = "complete";

    json summary_json(bool with_timings = true) const;
    // One JSONL line per record, then the summary object.
    void write_jsonl(std::ostream& out, bool with_timings = true) const;
};

struct CampaignOptions {
    int jobs = 1;
    SolverCaps caps{};
};

// Theorem: tau >= 4, kappa >= 2k, (P2 u kP1)-free, n >= 3 implies
// hamiltonian. Violations are re-verified twice through the brute-force
// oracles before they count, and carry a replay outcome.
CampaignReport verify_theorem(const std::vector<Graph>& corpus, const json& corpus_desc, int k,
                              const CampaignOptions& opts = {});

// Corollary: tau >= k, free, n >= 3 implies hamiltonian (connectivity
// implied; the record logs kappa against 2*ceil(tau)).
CampaignReport verify_corollary(const std::vector<Graph>& corpus, const json& corpus_desc,
                                int k, const CampaignOptions& opts = {});

// Bauer-Broersma-Veldman: tau >= t and delta > n/(t+1) - 1 and n >= 3
// implies hamiltonian.
CampaignReport verify_bauer(const std::vector<Graph>& corpus, const json& corpus_desc,
                            const Rational& t, const CampaignOptions& opts = {});

// Section-1 facts per graph: hamiltonian => 1-tough; kappa >= ceil(2 tau)
// for non-complete graphs (the literal 2*ceil(tau) reading is logged, not
// asserted); Chvatal-Erdos kappa >= alpha and n >= 3 => hamiltonian;
// specialized freeness == generic oracle for k <= 3.
CampaignReport cross_checks(const std::vector<Graph>& corpus, const json& corpus_desc,
                            const CampaignOptions& opts = {});

struct HuntParams {
    int k = 4;
    int n_lo = 9;
    int n_hi = 14;
    std::vector<Rational> ps;  // empty = default {1/2, 7/10, 9/10}
    std::uint64_t seed = 0;
    long budget = 1000;
    bool include_bipartite_family = true;
};

// Conjecture hunt: sample graphs, filter tau >= 1, kappa >= 2k, free,
// n >= 3, and flag non-hamiltonian survivors. Candidates are re-verified
// from scratch with the oracles (twice) before being reported; graphs
// failing exactly one hypothesis while non-hamiltonian become near-miss
// records. Ends with status "budget-exhausted".
CampaignReport hunt_conjecture(const HuntParams& params, const CampaignOptions& opts = {});

}  // namespace toughham
