#include "toughham/harness.hpp"

#include <omp.h>

#include <chrono>
#include <ostream>

#include "toughham/generators.hpp"
#include "toughham/graph6.hpp"
#include "toughham/oracles.hpp"

namespace toughham {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json set_json(VertexSet s) { return json(s.to_vector()); }

}  // namespace

std::string rational_str(const std::optional<Rational>& r) {
    return r ? r->str() : std::string("inf");
}

PropertyProfile profile(const Graph& g, const std::vector<int>& ks, const SolverCaps& caps) {
    PropertyProfile p;
    p.graph6 = write_graph6(g);
    p.n = g.n();
    p.m = g.edge_count();
    auto timed = [&](const char* name, auto&& fn) {
        const auto start = Clock::now();
        fn();
        p.timings_ms[name] = ms_since(start);
    };
    timed("delta", [&] { p.delta = g.n() ? min_degree(g) : 0; });
    timed("kappa", [&] { p.kappa = vertex_connectivity(g); });
    timed("alpha", [&] { p.alpha = independence_number(g).first; });
    timed("tau", [&] { p.tau = toughness(g, caps).value; });
    timed("hamiltonian",
          [&] { p.hamiltonian = g.n() >= 3 && hamiltonian_cycle(g).has_value(); });
    timed("freeness", [&] {
        for (int k : ks) p.freeness[k] = !is_p2kp1_free(g, k).has_value();
    });
    return p;
}

json profile_json(const PropertyProfile& p, bool with_timings) {
    json j{{"schema", "toughham/1"},
           {"graph6", p.graph6},
           {"n", p.n},
           {"m", p.m},
           {"delta", p.delta},
           {"kappa", p.kappa},
           {"alpha", p.alpha},
           {"tau", rational_str(p.tau)},
           {"hamiltonian", p.hamiltonian}};
    json free = json::object();
    for (const auto& [k, v] : p.freeness) free[std::to_string(k)] = v;
    j["free"] = free;
    if (with_timings) j["timings_ms"] = p.timings_ms;
    return j;
}

json certificate_json(const Certificate& cert) {
    json j{{"outcome", certificate_kind(cert)}};
    if (const auto* lc = std::get_if<LongerCycle>(&cert)) {
        j["tag"] = lc->tag;
        j["cycle"] = lc->cycle.order();
        j["params"] = lc->params;
    } else if (const auto* iw = std::get_if<InducedWitnessCert>(&cert)) {
        j["tag"] = iw->tag;
        j["edge"] = {iw->witness.u, iw->witness.v};
        j["isolated"] = set_json(iw->witness.isolated);
    } else if (const auto* tc = std::get_if<ToughnessCutCert>(&cert)) {
        j["tag"] = tc->tag;
        j["cutset"] = set_json(tc->cutset);
        j["ratio"] = tc->ratio.str();
        j["contradicts"] = "4-tough";
    } else if (const auto* ic = std::get_if<IndependentCutCert>(&cert)) {
        j["tag"] = "final";
        j["independent"] = set_json(ic->independent);
        j["cutset"] = set_json(ic->cutset);
        j["ratio"] = ic->ratio.str();
        j["contradicts"] = "4-tough";
    } else {
        const auto& hf = std::get<HypothesisFailureCert>(cert);
        j["which"] = hypothesis_kind_name(hf.which);
        if (hf.witness) j["witness"] = set_json(*hf.witness);
        if (hf.ratio) j["ratio"] = hf.ratio->str();
        j["note"] = hf.note;
    }
    return j;
}

json outcome_json(const ReplayOutcome& outcome) {
    if (outcome.hamiltonian)
        return json{{"outcome", "hamiltonian"}, {"cycle", outcome.hamiltonian->order()}};
    return certificate_json(*outcome.certificate);
}

void serial_for_index(long count, const std::function<void(long)>& fn) {
    for (long i = 0; i < count; ++i) fn(i);
}

void parallel_for_index(long count, int jobs, const std::function<void(long)>& fn) {
    if (jobs <= 1) {
        serial_for_index(count, fn);
        return;
    }
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long i = 0; i < count; ++i) fn(i);
}

json CampaignReport::summary_json(bool with_timings) const {
    json j{{"schema", "toughham/1"},
           {"campaign", campaign},
           {"corpus", corpus_desc},
           {"counts",
            {{"scanned", scanned},
             {"hypothesis_satisfying", hypothesis_satisfying},
             {"conclusion_holds", conclusion_holds},
             {"violations", violations}}},
           {"status", status},
           {"extra", extra}};
    if (with_timings) j["wall_ms"] = wall_ms;
    return j;
}

void CampaignReport::write_jsonl(std::ostream& out, bool with_timings) const {
    for (const GraphRecord& r : records) {
        json line = r.payload;
        if (with_timings) line["elapsed_ms"] = r.elapsed_ms;
        out << line.dump() << "\n";
    }
    out << summary_json(with_timings).dump() << "\n";
}

namespace {

struct PerGraph {
    json payload;
    bool hypothesis = false;
    bool conclusion = false;
    bool violation = false;
    double ms = 0;
};

CampaignReport fold(std::string name, json corpus_desc, std::vector<PerGraph> results,
                    double wall_ms) {
    CampaignReport report;
    report.campaign = std::move(name);
    report.corpus_desc = std::move(corpus_desc);
    report.scanned = static_cast<long>(results.size());
    report.wall_ms = wall_ms;
    for (long i = 0; i < report.scanned; ++i) {
        PerGraph& r = results[static_cast<std::size_t>(i)];
        report.hypothesis_satisfying += r.hypothesis;
        report.conclusion_holds += r.hypothesis && r.conclusion;
        if (r.violation) {
            ++report.violations;
            report.violation_seqs.push_back(i);
        }
        report.records.push_back(GraphRecord{i, std::move(r.payload), r.ms});
    }
    return report;
}

// Anti-false-positive contract: a candidate violation only counts after
// the hypothesis and the failed conclusion are re-derived from the
// brute-force oracles, twice.
bool oracle_confirms_violation(const Graph& g, int k, bool need_tau4, const Rational& tau_min) {
    for (int round = 0; round < 2; ++round) {
        if (g.n() < 3) return false;
        const auto tough = brute_force_toughness(g);
        if (!tough.infinite() && *tough.value < tau_min) return false;
        if (need_tau4 && !tough.infinite() && *tough.value < Rational(4)) return false;
        if (brute_force_connectivity(g) < 2 * k) return false;
        if (find_induced(g, p2_union_kp1(k))) return false;
        if (brute_force_hamiltonian(g)) return false;
        if (hamiltonian_dp(g)) return false;
    }
    return true;
}

}  // namespace

CampaignReport verify_theorem(const std::vector<Graph>& corpus, const json& corpus_desc, int k,
                              const CampaignOptions& opts) {
    const auto start = Clock::now();
    std::vector<PerGraph> results(corpus.size());
    const auto work = [&](long i) {
        const auto t0 = Clock::now();
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        PerGraph& r = results[static_cast<std::size_t>(i)];
        r.payload = json{{"seq", i}, {"graph6", write_graph6(g)}, {"n", g.n()}};
        std::string filter;
        // Cheapest hypothesis first; delta < 2k already bounds kappa.
        if (g.n() < 3)
            filter = "n";
        else if (min_degree(g) < 2 * k || vertex_connectivity(g) < 2 * k)
            filter = "kappa";
        else if (is_p2kp1_free(g, k).has_value())
            filter = "free";
        else if (!is_t_tough(g, Rational(4), opts.caps).tough)
            filter = "tau";
        if (!filter.empty()) {
            r.payload["filter"] = filter;
            r.ms = ms_since(t0);
            return;
        }
        r.hypothesis = true;
        r.conclusion = hamiltonian_cycle(g).has_value();
        r.payload["hypothesis"] = true;
        r.payload["hamiltonian"] = r.conclusion;
        if (!r.conclusion && oracle_confirms_violation(g, k, true, Rational(4))) {
            r.violation = true;
            r.payload["violation"] = true;
            r.payload["profile"] = profile_json(profile(g, {k}, opts.caps), false);
            r.payload["replay"] = outcome_json(replay(g, k, std::nullopt, {false, opts.caps}));
        }
        r.ms = ms_since(t0);
    };
    parallel_for_index(static_cast<long>(corpus.size()), opts.jobs, work);
    CampaignReport report =
        fold("theorem", corpus_desc, std::move(results), ms_since(start));
    report.extra = json{{"k", k}};
    return report;
}

CampaignReport verify_corollary(const std::vector<Graph>& corpus, const json& corpus_desc,
                                int k, const CampaignOptions& opts) {
    const auto start = Clock::now();
    std::vector<PerGraph> results(corpus.size());
    const auto work = [&](long i) {
        const auto t0 = Clock::now();
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        PerGraph& r = results[static_cast<std::size_t>(i)];
        r.payload = json{{"seq", i}, {"graph6", write_graph6(g)}, {"n", g.n()}};
        std::string filter;
        if (g.n() < 3)
            filter = "n";
        else if (is_p2kp1_free(g, k).has_value())
            filter = "free";
        else if (!is_t_tough(g, Rational(k), opts.caps).tough)
            filter = "tau";
        if (!filter.empty()) {
            r.payload["filter"] = filter;
            r.ms = ms_since(t0);
            return;
        }
        r.hypothesis = true;
        r.conclusion = hamiltonian_cycle(g).has_value();
        r.payload["hypothesis"] = true;
        r.payload["hamiltonian"] = r.conclusion;
        // k-tough implies 2k-connected for non-complete graphs; log it.
        const int kappa = vertex_connectivity(g);
        r.payload["kappa"] = kappa;
        r.payload["kappa_ge_2k"] = g.is_complete() || kappa >= 2 * k;
        if (!r.conclusion && oracle_confirms_violation(g, k, false, Rational(k))) {
            r.violation = true;
            r.payload["violation"] = true;
            r.payload["profile"] = profile_json(profile(g, {k}, opts.caps), false);
        }
        r.ms = ms_since(t0);
    };
    parallel_for_index(static_cast<long>(corpus.size()), opts.jobs, work);
    CampaignReport report =
        fold("corollary", corpus_desc, std::move(results), ms_since(start));
    report.extra = json{{"k", k}};
    return report;
}

CampaignReport verify_bauer(const std::vector<Graph>& corpus, const json& corpus_desc,
                            const Rational& t, const CampaignOptions& opts) {
    if (!(t > Rational(0))) throw InvalidSizeError("bauer check needs t > 0");
    const auto start = Clock::now();
    std::vector<PerGraph> results(corpus.size());
    const auto work = [&](long i) {
        const auto t0 = Clock::now();
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        PerGraph& r = results[static_cast<std::size_t>(i)];
        r.payload = json{{"seq", i}, {"graph6", write_graph6(g)}, {"n", g.n()}};
        std::string filter;
        // delta > n/(t+1) - 1, exactly: (delta+1)(p+q) > n q for t = p/q.
        if (g.n() < 3) {
            filter = "n";
        } else {
            const std::int64_t delta = min_degree(g);
            const bool degree_ok =
                (delta + 1) * (t.num() + t.den()) > static_cast<std::int64_t>(g.n()) * t.den();
            if (!degree_ok)
                filter = "delta";
            else if (!is_t_tough(g, t, opts.caps).tough)
                filter = "tau";
        }
        if (!filter.empty()) {
            r.payload["filter"] = filter;
            r.ms = ms_since(t0);
            return;
        }
        r.hypothesis = true;
        r.conclusion = hamiltonian_cycle(g).has_value();
        r.payload["hypothesis"] = true;
        r.payload["hamiltonian"] = r.conclusion;
        if (!r.conclusion) {
            // Re-verify twice against the oracles before reporting.
            bool real = true;
            for (int round = 0; round < 2 && real; ++round) {
                const auto tough = brute_force_toughness(g);
                if (!tough.infinite() && *tough.value < t) real = false;
                if (brute_force_hamiltonian(g)) real = false;
            }
            if (real) {
                r.violation = true;
                r.payload["violation"] = true;
            }
        }
        r.ms = ms_since(t0);
    };
    parallel_for_index(static_cast<long>(corpus.size()), opts.jobs, work);
    CampaignReport report = fold("bauer", corpus_desc, std::move(results), ms_since(start));
    report.extra = json{{"t", t.str()}};
    return report;
}

CampaignReport cross_checks(const std::vector<Graph>& corpus, const json& corpus_desc,
                            const CampaignOptions& opts) {
    const auto start = Clock::now();
    std::vector<PerGraph> results(corpus.size());
    const auto work = [&](long i) {
        const auto t0 = Clock::now();
        const Graph& g = corpus[static_cast<std::size_t>(i)];
        PerGraph& r = results[static_cast<std::size_t>(i)];
        r.payload = json{{"seq", i}, {"graph6", write_graph6(g)}, {"n", g.n()}};
        r.hypothesis = true;
        bool ok = true;
        json checks = json::object();
        const bool ham = g.n() >= 3 && hamiltonian_cycle(g).has_value();
        const auto tough = g.n() >= 1 ? toughness(g, opts.caps)
                                      : ToughnessResult{std::nullopt, VertexSet()};
        // (a) hamiltonian => 1-tough
        const bool a = !ham || tough.infinite() || *tough.value >= Rational(1);
        checks["ham_implies_1_tough"] = a;
        ok = ok && a;
        // (b) non-complete => kappa >= ceil(2 tau); the paper's literal
        // 2*ceil(tau) reading is only logged (false already for P3).
        bool b = true;
        bool literal = true;
        if (!g.is_complete() && g.n() >= 1) {
            const int kappa = vertex_connectivity(g);
            const Rational two_tau = *tough.value * Rational(2);
            b = kappa >= two_tau.ceil();
            literal = kappa >= 2 * tough.value->ceil();
        }
        checks["kappa_ge_ceil_2tau"] = b;
        checks["kappa_ge_2ceil_tau_literal"] = literal;
        ok = ok && b;
        // (c) Chvatal-Erdos
        bool c = true;
        if (g.n() >= 3) {
            const int kappa = vertex_connectivity(g);
            const int alpha = independence_number(g).first;
            c = kappa < alpha || ham;
        }
        checks["chvatal_erdos"] = c;
        ok = ok && c;
        // (d) specialized freeness == generic oracle, k <= 3
        bool d = true;
        for (int k = 1; k <= 3; ++k) {
            const bool specialized = !is_p2kp1_free(g, k).has_value();
            const bool generic = !find_induced(g, p2_union_kp1(k)).has_value();
            if (specialized != generic) d = false;
        }
        checks["freeness_equivalence"] = d;
        ok = ok && d;
        r.payload["checks"] = checks;
        r.conclusion = ok;
        r.violation = !ok;
        if (!ok) r.payload["violation"] = true;
        r.ms = ms_since(t0);
    };
    parallel_for_index(static_cast<long>(corpus.size()), opts.jobs, work);
    CampaignReport report = fold("cross", corpus_desc, std::move(results), ms_since(start));
    long literal_flags = 0;
    for (const GraphRecord& rec : report.records)
        if (!rec.payload["checks"]["kappa_ge_2ceil_tau_literal"].get<bool>()) ++literal_flags;
    report.extra = json{{"ceiling_literal_flags", literal_flags}};
    return report;
}

CampaignReport hunt_conjecture(const HuntParams& params, const CampaignOptions& opts) {
    if (params.k < 4) throw InvalidSizeError("hunt requires k >= 4");
    if (params.budget < 0) throw InvalidSizeError("negative budget");
    const auto start = Clock::now();

    std::vector<Rational> ps = params.ps;
    if (ps.empty()) ps = {Rational(1, 2), Rational(7, 10), Rational(9, 10)};

    // Deterministic stream: the structured bipartite family first, then
    // the seeded G(n, p) samples, truncated to the budget.
    std::vector<Graph> stream;
    std::vector<std::string> origin;
    if (params.include_bipartite_family) {
        for (int n = params.n_lo; n <= params.n_hi; ++n)
            for (int a = 1; 2 * a <= n; ++a) {
                stream.push_back(complete_bipartite(a, n - a));
                origin.push_back("bipartite");
            }
    }
    const long want_random =
        params.budget - static_cast<long>(stream.size());
    if (want_random > 0) {
        const auto random_part =
            gnp_stream(params.n_lo, params.n_hi, ps, params.seed, want_random);
        for (const Graph& g : random_part) {
            stream.push_back(g);
            origin.push_back("gnp");
        }
    }
    if (static_cast<long>(stream.size()) > params.budget)
        stream.resize(static_cast<std::size_t>(params.budget));

    std::vector<PerGraph> results(stream.size());
    const int k = params.k;
    const auto work = [&](long i) {
        const auto t0 = Clock::now();
        const Graph& g = stream[static_cast<std::size_t>(i)];
        PerGraph& r = results[static_cast<std::size_t>(i)];
        r.payload = json{{"seq", i},
                         {"graph6", write_graph6(g)},
                         {"n", g.n()},
                         {"origin", origin[static_cast<std::size_t>(i)]}};
        // All four hypothesis bits, cheapest first, stopping once two have
        // failed (no longer a candidate nor a near-miss).
        int fails = 0;
        json bits = json::object();
        const bool bit_n = g.n() >= 3;
        bits["n"] = bit_n;
        fails += !bit_n;
        bool bit_kappa = false, bit_free = false, bit_tau = false;
        if (fails < 2) {
            bit_kappa = bit_n && min_degree(g) >= 2 * k && vertex_connectivity(g) >= 2 * k;
            bits["kappa"] = bit_kappa;
            fails += !bit_kappa;
        }
        if (fails < 2) {
            bit_free = !is_p2kp1_free(g, k).has_value();
            bits["free"] = bit_free;
            fails += !bit_free;
        }
        if (fails < 2) {
            bit_tau = is_t_tough(g, Rational(1), opts.caps).tough;
            bits["tau"] = bit_tau;
            fails += !bit_tau;
        }
        r.payload["hypotheses"] = bits;
        if (fails >= 2) {
            r.ms = ms_since(t0);
            return;
        }
        const bool ham = g.n() >= 3 && hamiltonian_cycle(g).has_value();
        r.payload["hamiltonian"] = ham;
        if (fails == 0) {
            r.hypothesis = true;
            r.conclusion = ham;
            if (!ham && oracle_confirms_violation(g, k, false, Rational(1))) {
                r.violation = true;  // a verified counterexample candidate
                r.payload["counterexample"] = true;
                r.payload["profile"] = profile_json(profile(g, {k}, opts.caps), false);
                r.payload["replay"] =
                    outcome_json(replay(g, k, std::nullopt, {false, opts.caps}));
            }
        } else if (!ham) {
            r.payload["near_miss"] = true;
        }
        r.ms = ms_since(t0);
    };
    parallel_for_index(static_cast<long>(stream.size()), opts.jobs, work);

    CampaignReport report = fold("hunt",
                                 json{{"sampler", "bipartite-family+gnp"},
                                      {"n", {params.n_lo, params.n_hi}},
                                      {"seed", params.seed},
                                      {"budget", params.budget}},
                                 std::move(results), ms_since(start));
    long near_misses = 0;
    for (const GraphRecord& rec : report.records)
        if (rec.payload.contains("near_miss")) ++near_misses;
    report.extra = json{{"k", k}, {"near_misses", near_misses}};
    report.status = "budget-exhausted";
    return report;
}

}  // namespace toughham
