#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toughham/hamilton.hpp"
#include "toughham/structure.hpp"

namespace toughham {

// One exterior component H of G - V(C) together with its attachment
// vertices x_1..x_t on C, listed clockwise in the working orientation.
// The working orientation mechanizes the proof's "without loss of
// generality": when t >= k+1, all t rotations and both orientations are
// tested and the lexicographically least attachment sequence satisfying
// |V(x_1 -> x_{k+1})| <= |V(x_{k+1} -> x_1)| is chosen. If none
// qualifies (only possible when t < 2k) or t <= k, the lex-least
// sequence overall is used and `anchored` stays false.
struct AttachmentStructure {
    VertexSet h;
    std::vector<int> working;      // cycle order in the working orientation, x_1 first
    std::vector<int> attachments;  // x_1..x_t
    VertexSet x_all;               // {x_1+, ..., x_t+} in the working orientation
    int t = 0;
    bool anchored = false;

    int successor_of_attachment(int idx) const {
        // attachments are never the last cycle vertex: x_1 sits at
        // position 0, so every successor is working[pos+1].
        return working[(position_of(attachments[static_cast<std::size_t>(idx)]) + 1) %
                       working.size()];
    }
    std::size_t position_of(int v) const;
};

// The long arc x_{k+1} -> x_1 written as x_{k+1}, x_{k+1}+, y_1..y_h, x_1,
// and the alternating set Y = {y_2, y_4, ...} (1-based even indices).
struct ArcDecomposition {
    std::vector<int> ys;
    int h = 0;
    VertexSet y_set;
    int base = -1;       // x_{k+1}
    int base_succ = -1;  // x_{k+1}+
    VertexSet x_k1;      // X = {x_1+, ..., x_{k+1}+}
    std::vector<int> x_k1_list;
};

struct LongerCycle {
    OrientedCycle cycle;
    std::string tag;          // names the claim/case construction used
    std::vector<int> params;  // indices the construction was instantiated with
};

struct InducedWitnessCert {
    FreenessWitness witness;
    std::string tag;
};

struct ToughnessCutCert {
    VertexSet cutset;
    Rational ratio;
    std::string tag;
};

struct IndependentCutCert {
    VertexSet independent;  // X u Y
    VertexSet cutset;       // V \ (X u Y)
    Rational ratio;
};

enum class HypothesisKind { not_4_tough, not_2k_connected, not_free, n_too_small };

const char* hypothesis_kind_name(HypothesisKind k);

struct HypothesisFailureCert {
    HypothesisKind which;
    std::optional<VertexSet> witness;
    std::optional<Rational> ratio;
    std::string note;
};

using Certificate = std::variant<LongerCycle, InducedWitnessCert, ToughnessCutCert,
                                 IndependentCutCert, HypothesisFailureCert>;

const char* certificate_kind(const Certificate& cert);

struct ReplayOutcome {
    std::optional<OrientedCycle> hamiltonian;
    std::optional<Certificate> certificate;

    const char* kind() const {
        return hamiltonian ? "hamiltonian" : certificate_kind(*certificate);
    }
};

// Attachment structure of the component of G - V(C) holding the smallest
// vertex label. Throws NoExteriorVertexError if C spans g.
AttachmentStructure attachment_structure(const Graph& g, const OrientedCycle& c, int k);

// Same, for an explicit component (replay iterates all of them).
AttachmentStructure attachment_structure_for(const Graph& g, const OrientedCycle& c, int k,
                                             VertexSet component);

// Claim 1: attachments pairwise nonconsecutive on C and the successor set
// independent; a violation yields the proof's rerouted longer cycle.
std::optional<Certificate> claim1_check(const Graph& g, const AttachmentStructure& s);

// Claim 2: the structure's component is trivial, or an induced P2 u kP1
// (t >= k) / connectivity failure (t < k) falls out.
std::optional<Certificate> claim2_check(const Graph& g, const AttachmentStructure& s, int k);

// Claim 3: |V(C)| >= 4n/5, else V(C) is a cutset of ratio < 4. Requires
// every exterior component trivial; throws SNotCutError if none exist.
std::optional<Certificate> claim3_check(const Graph& g, const OrientedCycle& c);

// Requires t >= k+1.
ArcDecomposition arc_decomposition(const Graph& g, const AttachmentStructure& s, int k);

// Claim 4: walk the arc in pairs (y_1,y_2), (y_3,y_4), ... and run the
// proof's Cases 1-3 at each pair. Returns the verified Y on success.
// Throws ArcTooShortError when h < 2 (callers fall through to final_cut
// with Y empty).
std::variant<VertexSet, Certificate> claim4_scan(const Graph& g, const AttachmentStructure& s,
                                                 const ArcDecomposition& arcs, int k);

// Final paragraph: S = V \ (X u Y). IndependentCut when the ratio is
// below 4, HypothesisFailure(n-too-small) otherwise.
Certificate final_cut(const Graph& g, const AttachmentStructure& s, VertexSet y, int k);

struct ReplayOptions {
    bool cycle_verified_longest = false;
    SolverCaps caps{};
};

// Execute the whole proof on (g, k): Hamiltonian outcome or the first
// certificate produced, every certificate re-validated on the way out.
// If c is absent the longest cycle is computed (and is then verified
// longest, so a LongerCycle outcome becomes a hard internal error).
ReplayOutcome replay(const Graph& g, int k, std::optional<OrientedCycle> c = std::nullopt,
                     const ReplayOptions& opts = {});

// Independent checker: re-validates an outcome using only graph-core and
// structure primitives. base_cycle_len is |V(C)| when a cycle context
// exists. Throws ValidationError with a reason on any mismatch.
void validate_certificate(const Graph& g, int k, std::optional<int> base_cycle_len,
                          const Certificate& cert);
void validate_outcome(const Graph& g, int k, std::optional<int> base_cycle_len,
                      const ReplayOutcome& outcome);

// Construction fidelity: re-derive the context from (g, k, c) and re-run
// the single construction named by cert.tag with cert.params. The result
// must reproduce cert.cycle exactly.
OrientedCycle rebuild_longer_cycle(const Graph& g, int k, const OrientedCycle& c,
                                   const LongerCycle& cert);

}  // namespace toughham
