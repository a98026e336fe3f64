#include "toughham/replay.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace toughham {

const char* hypothesis_kind_name(HypothesisKind k) {
    switch (k) {
        case HypothesisKind::not_4_tough: return "not-4-tough";
        case HypothesisKind::not_2k_connected: return "not-2k-connected";
        case HypothesisKind::not_free: return "not-free";
        case HypothesisKind::n_too_small: return "n-too-small";
    }
    return "?";
}

const char* certificate_kind(const Certificate& cert) {
    struct Visitor {
        const char* operator()(const LongerCycle&) const { return "longer-cycle"; }
        const char* operator()(const InducedWitnessCert&) const { return "induced-witness"; }
        const char* operator()(const ToughnessCutCert&) const { return "toughness-cut"; }
        const char* operator()(const IndependentCutCert&) const { return "independent-cut"; }
        const char* operator()(const HypothesisFailureCert&) const { return "hypothesis-failure"; }
    };
    return std::visit(Visitor{}, cert);
}

std::size_t AttachmentStructure::position_of(int v) const {
    for (std::size_t i = 0; i < working.size(); ++i)
        if (working[i] == v) return i;
    throw NotOnCycleError("vertex not on working cycle");
}

namespace {

// ---- segment helpers on the working order (positions mod L) ----------

void append_fwd(std::vector<int>& seq, const std::vector<int>& order, std::size_t from,
                std::size_t to) {
    const std::size_t len = order.size();
    std::size_t p = from % len;
    seq.push_back(order[p]);
    while (p != to % len) {
        p = (p + 1) % len;
        seq.push_back(order[p]);
    }
}

void append_bwd(std::vector<int>& seq, const std::vector<int>& order, std::size_t from,
                std::size_t to) {
    const std::size_t len = order.size();
    std::size_t p = from % len;
    seq.push_back(order[p]);
    while (p != to % len) {
        p = (p + len - 1) % len;
        seq.push_back(order[p]);
    }
}

std::size_t att_pos(const AttachmentStructure& s, int idx) {
    return s.position_of(s.attachments[static_cast<std::size_t>(idx)]);
}

OrientedCycle checked_cycle(const Graph& g, const std::vector<int>& seq, std::size_t min_len,
                            const char* what) {
    if (seq.size() < min_len || !is_cycle_of(g, seq))
        throw ValidationError(std::string("construction '") + what +
                              "' did not produce a longer cycle");
    return OrientedCycle::from_order(seq, g);
}

// Lexicographically earliest shortest path between a and b inside G[h].
std::vector<int> path_in_component(const Graph& g, VertexSet h, int a, int b) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue;
    queue.push_back(a);
    parent[static_cast<std::size_t>(a)] = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        if (v == b) break;
        for (std::uint64_t m = (g.neighbors(v) & h).bits(); m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (parent[static_cast<std::size_t>(u)] >= 0) continue;
            parent[static_cast<std::size_t>(u)] = v;
            queue.push_back(u);
        }
    }
    if (parent[static_cast<std::size_t>(b)] < 0)
        throw ValidationError("exterior component not connected");
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

int smallest_h_neighbor(const Graph& g, const AttachmentStructure& s, int attachment) {
    const VertexSet nb = g.neighbors(attachment) & s.h;
    if (nb.empty()) throw ValidationError("attachment without neighbor in H");
    return nb.first();
}

// ---- the quoted longer-cycle constructions ---------------------------

// Claim 1, consecutive attachments: insert an H-path between x_i and its
// cycle successor x_j = x_i+.
std::vector<int> build_claim1_consecutive(const Graph& g, const AttachmentStructure& s, int i) {
    const int t = s.t;
    const int xi = s.attachments[static_cast<std::size_t>(i)];
    const int xj = s.attachments[static_cast<std::size_t>((i + 1) % t)];
    const std::vector<int> p = path_in_component(g, s.h, smallest_h_neighbor(g, s, xi),
                                                 smallest_h_neighbor(g, s, xj));
    std::vector<int> seq{xi};
    seq.insert(seq.end(), p.begin(), p.end());
    append_fwd(seq, s.working, s.position_of(xj), s.position_of(xi) + s.working.size() - 1);
    return seq;
}

// Claim 1, successor chord x_i+ x_j+: x_i x_i' P x_j' x_j <-C x_i+ x_j+ ->C x_i.
std::vector<int> build_claim1_chord(const Graph& g, const AttachmentStructure& s, int i, int j) {
    const int xi = s.attachments[static_cast<std::size_t>(i)];
    const int xj = s.attachments[static_cast<std::size_t>(j)];
    const std::vector<int> p = path_in_component(g, s.h, smallest_h_neighbor(g, s, xi),
                                                 smallest_h_neighbor(g, s, xj));
    std::vector<int> seq{xi};
    seq.insert(seq.end(), p.begin(), p.end());
    const std::size_t len = s.working.size();
    append_bwd(seq, s.working, s.position_of(xj), s.position_of(xi) + 1);
    append_fwd(seq, s.working, s.position_of(xj) + 1, s.position_of(xi) + len - 1);
    return seq;
}

// Shared shape of Case 1 and its relatives (i < j, a = y_odd, b = y_even,
// with b ~ x_j+ and a ~ x_i+): x x_i <-C b x_j+ ->C a x_i+ ->C x_j x.
std::vector<int> build_case1(const Graph& g, const AttachmentStructure& s,
                             const ArcDecomposition& arc, int pair, int i, int j) {
    const int x = s.h.first();
    const int a = arc.ys[static_cast<std::size_t>(pair)];
    const int b = arc.ys[static_cast<std::size_t>(pair + 1)];
    (void)g;
    std::vector<int> seq{x};
    append_bwd(seq, s.working, att_pos(s, i), s.position_of(b));
    append_fwd(seq, s.working, att_pos(s, j) + 1, s.position_of(a));
    append_fwd(seq, s.working, att_pos(s, i) + 1, att_pos(s, j));
    return seq;
}

// Case 2/3 with x ~ y_1 and s = l = i: x y_1 <-C x_i+ y_2 ->C x_i x.
std::vector<int> build_case2_xy1(const Graph& g, const AttachmentStructure& s,
                                 const ArcDecomposition& arc, int pair, int i) {
    const int x = s.h.first();
    const int a = arc.ys[static_cast<std::size_t>(pair)];
    const int b = arc.ys[static_cast<std::size_t>(pair + 1)];
    (void)g;
    std::vector<int> seq{x};
    append_bwd(seq, s.working, s.position_of(a), att_pos(s, i) + 1);
    append_fwd(seq, s.working, s.position_of(b), att_pos(s, i));
    return seq;
}

// Case 3 with x ~ y_1 and s > l: x x_l <-C y_2 x_l+ ->C y_1 x.
std::vector<int> build_case3_xy1(const Graph& g, const AttachmentStructure& s,
                                 const ArcDecomposition& arc, int pair, int l) {
    const int x = s.h.first();
    const int a = arc.ys[static_cast<std::size_t>(pair)];
    const int b = arc.ys[static_cast<std::size_t>(pair + 1)];
    (void)g;
    std::vector<int> seq{x};
    append_bwd(seq, s.working, att_pos(s, l), s.position_of(b));
    append_fwd(seq, s.working, att_pos(s, l) + 1, s.position_of(a));
    return seq;
}

// Case 2/3, y_1 adjacent to a successor beyond x_{k+1}:
// x x_i <-C x_h+ y_1 <-C x_i+ y_2 ->C x_h x.
std::vector<int> build_outer(const Graph& g, const AttachmentStructure& s,
                             const ArcDecomposition& arc, int pair, int i, int h_idx) {
    const int x = s.h.first();
    const int a = arc.ys[static_cast<std::size_t>(pair)];
    const int b = arc.ys[static_cast<std::size_t>(pair + 1)];
    (void)g;
    std::vector<int> seq{x};
    append_bwd(seq, s.working, att_pos(s, i), att_pos(s, h_idx) + 1);
    append_bwd(seq, s.working, s.position_of(a), att_pos(s, i) + 1);
    append_fwd(seq, s.working, s.position_of(b), att_pos(s, h_idx));
    return seq;
}

Certificate longer_cycle_cert(const Graph& g, std::size_t base_len, std::vector<int> seq,
                              std::string tag, std::vector<int> params) {
    OrientedCycle cycle = checked_cycle(g, seq, base_len + 1, tag.c_str());
    return LongerCycle{std::move(cycle), std::move(tag), std::move(params)};
}

Certificate induced_cert(const Graph& g, int k, int u, int v, VertexSet isolated,
                         std::string tag) {
    // Take the k smallest qualifying vertices.
    while (isolated.count() > k) {
        std::uint64_t bits = isolated.bits();
        // clear the highest set bit
        bits &= ~(1ULL << (63 - std::countl_zero(bits)));
        isolated = VertexSet(bits);
    }
    FreenessWitness w{u, v, isolated};
    if (!freeness_witness_valid(g, k, w))
        throw ValidationError("induced witness from '" + tag + "' failed validation");
    return InducedWitnessCert{w, std::move(tag)};
}

int component_count(const Graph& g, VertexSet keep) {
    int c = 0;
    std::uint64_t seen = 0;
    for (std::uint64_t m = keep.bits(); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((seen >> v) & 1) continue;
        seen |= component_of(g, v, keep).bits();
        ++c;
    }
    return c;
}

Certificate not_2k_cert(const Graph& g, const AttachmentStructure& s, int k,
                        const std::string& note) {
    std::uint64_t bits = 0;
    for (int a : s.attachments) bits |= 1ULL << a;
    const VertexSet cut(bits);
    const int c = component_count(g, g.vertices() - cut);
    if (c < 2)
        throw ValidationError("attachment set is not a cutset (" + note + ")");
    if (s.t >= 2 * k) throw ValidationError("not-2k-connected emitted with t >= 2k");
    return HypothesisFailureCert{HypothesisKind::not_2k_connected, cut, Rational(s.t, c), note};
}

}  // namespace

AttachmentStructure attachment_structure_for(const Graph& g, const OrientedCycle& c, int k,
                                             VertexSet component) {
    const VertexSet on_cycle = c.vertex_set();
    const VertexSet atts = g.neighborhood_of(component) & on_cycle;
    const int t = atts.count();
    const std::size_t len = static_cast<std::size_t>(c.length());

    std::vector<int> fwd = c.order();
    std::vector<int> bwd(fwd.rbegin(), fwd.rend());

    AttachmentStructure best;
    bool have = false;
    bool best_qualifies = false;

    for (const std::vector<int>* order : {&fwd, &bwd}) {
        if (t == 0) break;
        std::vector<std::size_t> pos;
        for (std::size_t p = 0; p < len; ++p)
            if (atts.contains((*order)[p])) pos.push_back(p);
        for (int r = 0; r < t; ++r) {
            std::vector<int> seq(static_cast<std::size_t>(t));
            for (int i = 0; i < t; ++i)
                seq[static_cast<std::size_t>(i)] =
                    (*order)[pos[static_cast<std::size_t>((r + i) % t)]];
            bool qualifies = false;
            if (t >= k + 1) {
                const std::size_t p1 = pos[static_cast<std::size_t>(r)];
                const std::size_t pk1 = pos[static_cast<std::size_t>((r + k) % t)];
                const std::size_t a_size = (pk1 + len - p1) % len + 1;
                qualifies = a_size <= len - a_size + 2;
            }
            const bool prefer =
                !have || (qualifies && !best_qualifies) ||
                (qualifies == best_qualifies &&
                 std::lexicographical_compare(seq.begin(), seq.end(), best.attachments.begin(),
                                              best.attachments.end()));
            if (!prefer) continue;
            have = true;
            best_qualifies = qualifies;
            best.attachments = seq;
            best.working.assign(len, 0);
            const std::size_t start = pos[static_cast<std::size_t>(r)];
            for (std::size_t i = 0; i < len; ++i)
                best.working[i] = (*order)[(start + i) % len];
        }
    }
    if (t == 0) {
        best.working = fwd;
        best.attachments.clear();
    }
    best.h = component;
    best.t = t;
    best.anchored = best_qualifies;
    std::uint64_t succ = 0;
    for (int i = 0; i < t; ++i) succ |= 1ULL << best.successor_of_attachment(i);
    best.x_all = VertexSet(succ);
    return best;
}

AttachmentStructure attachment_structure(const Graph& g, const OrientedCycle& c, int k) {
    const VertexSet exterior = g.vertices() - c.vertex_set();
    if (exterior.empty()) throw NoExteriorVertexError("cycle spans the whole graph");
    return attachment_structure_for(g, c, k, component_of(g, exterior.first(), exterior));
}

std::optional<Certificate> claim1_check(const Graph& g, const AttachmentStructure& s) {
    const std::size_t base = s.working.size();
    // Part one: no two attachments consecutive on C.
    if (s.t >= 2) {
        for (int i = 0; i < s.t; ++i) {
            const int next_att = s.attachments[static_cast<std::size_t>((i + 1) % s.t)];
            if (s.working[(att_pos(s, i) + 1) % base] != next_att) continue;
            return longer_cycle_cert(g, base, build_claim1_consecutive(g, s, i),
                                     "claim1-consecutive", {s.h.first(), i});
        }
    }
    // Part two: successor set independent.
    for (int i = 0; i < s.t; ++i)
        for (int j = i + 1; j < s.t; ++j)
            if (g.has_edge(s.successor_of_attachment(i), s.successor_of_attachment(j)))
                return longer_cycle_cert(g, base, build_claim1_chord(g, s, i, j), "claim1-chord",
                                         {s.h.first(), i, j});
    return std::nullopt;
}

std::optional<Certificate> claim2_check(const Graph& g, const AttachmentStructure& s, int k) {
    if (s.h.count() <= 1) return std::nullopt;
    // H is connected and nontrivial, so it has an edge; take the lex first.
    int u = -1, v = -1;
    for (std::uint64_t m = s.h.bits(); m && u < 0; m &= m - 1) {
        const int cand = std::countr_zero(m);
        const VertexSet inner = g.neighbors(cand) & s.h;
        if (!inner.empty()) {
            u = cand;
            v = inner.first();
        }
    }
    if (u < 0) throw ValidationError("nontrivial component without internal edge");
    if (s.t < k) return not_2k_cert(g, s, k, "nontrivial exterior component with t < k");
    const VertexSet candidates =
        s.x_all - (g.neighbors(u) | g.neighbors(v) | VertexSet{u, v});
    if (candidates.count() < k)
        throw ValidationError("claim2: successors adjacent to H edge");
    return induced_cert(g, k, u, v, candidates, "claim2");
}

std::optional<Certificate> claim3_check(const Graph& g, const OrientedCycle& c) {
    const int n = g.n();
    const VertexSet exterior = g.vertices() - c.vertex_set();
    if (exterior.empty()) throw SNotCutError("V(C) covers the graph");
    // exact comparison |V(C)| < 4n/5
    if (Rational(5 * c.length()) >= Rational(4 * n)) return std::nullopt;
    const int comps = component_count(g, exterior);
    const Rational ratio(c.length(), comps);
    if (!(ratio < Rational(4)))
        throw ValidationError("claim3 fired with ratio >= 4 (nontrivial components upstream?)");
    return ToughnessCutCert{c.vertex_set(), ratio, "claim3"};
}

ArcDecomposition arc_decomposition(const Graph& g, const AttachmentStructure& s, int k) {
    (void)g;
    if (s.t < k + 1) throw InvalidSizeError("arc decomposition needs t >= k+1");
    ArcDecomposition arc;
    const std::size_t len = s.working.size();
    const std::size_t pos_base = att_pos(s, k);
    arc.base = s.attachments[static_cast<std::size_t>(k)];
    arc.base_succ = s.working[(pos_base + 1) % len];
    for (std::size_t p = pos_base + 2; p < len; ++p) arc.ys.push_back(s.working[p]);
    arc.h = static_cast<int>(arc.ys.size());
    std::uint64_t y_bits = 0;
    const int limit = arc.h % 2 == 0 ? arc.h - 1 : arc.h - 2;  // last 0-based odd index
    for (int j = 1; j <= limit; j += 2) y_bits |= 1ULL << arc.ys[static_cast<std::size_t>(j)];
    arc.y_set = VertexSet(y_bits);
    std::uint64_t x_bits = 0;
    for (int i = 0; i <= k; ++i) {
        const int sv = s.successor_of_attachment(i);
        arc.x_k1_list.push_back(sv);
        x_bits |= 1ULL << sv;
    }
    arc.x_k1 = VertexSet(x_bits);
    return arc;
}

namespace {

// Successors of attachments with index in [k+1, t-1] ("x_{k+2}+ .. x_t+").
VertexSet high_successors(const AttachmentStructure& s, int k) {
    std::uint64_t bits = 0;
    for (int i = k + 1; i < s.t; ++i) bits |= 1ULL << s.successor_of_attachment(i);
    return VertexSet(bits);
}

// Vertices of the working order between two positions inclusive, forward.
VertexSet span_set(const AttachmentStructure& s, std::size_t from, std::size_t to) {
    const std::size_t len = s.working.size();
    std::uint64_t bits = 0;
    std::size_t p = from % len;
    bits |= 1ULL << s.working[p];
    while (p != to % len) {
        p = (p + 1) % len;
        bits |= 1ULL << s.working[p];
    }
    return VertexSet(bits);
}

int attachment_index_of_successor(const ArcDecomposition& arc, int vertex) {
    for (std::size_t i = 0; i < arc.x_k1_list.size(); ++i)
        if (arc.x_k1_list[i] == vertex) return static_cast<int>(i);
    throw ValidationError("successor not in X");
}

// Smallest attachment index whose successor lies in `set`, or -1. The
// paper's s and l are minima/maxima over attachment indices, not labels.
int min_index_with_successor_in(const ArcDecomposition& arc, VertexSet set) {
    for (std::size_t i = 0; i < arc.x_k1_list.size(); ++i)
        if (set.contains(arc.x_k1_list[i])) return static_cast<int>(i);
    return -1;
}

int max_index_with_successor_in(const ArcDecomposition& arc, VertexSet set) {
    for (int i = static_cast<int>(arc.x_k1_list.size()) - 1; i >= 0; --i)
        if (set.contains(arc.x_k1_list[static_cast<std::size_t>(i)])) return i;
    return -1;
}

}  // namespace

std::variant<VertexSet, Certificate> claim4_scan(const Graph& g, const AttachmentStructure& s,
                                                 const ArcDecomposition& arc, int k) {
    if (s.t < k + 1) return not_2k_cert(g, s, k, "t < k+1 before the arc argument");
    if (!s.anchored)
        return not_2k_cert(g, s, k, "no rotation places x_1..x_{k+1} on the short side");
    if (arc.h < 2) throw ArcTooShortError("arc interior shorter than one (y_1, y_2) pair");
    if (s.h.count() != 1)
        throw ValidationError("claim4 before claim2: exterior component not a single vertex");

    const int x = s.h.first();
    const VertexSet x_set = arc.x_k1;
    const std::size_t base_len = s.working.size();
    const VertexSet high = high_successors(s, k);

    int prev = arc.base_succ;
    for (int p = 0; p + 1 < arc.h; p += 2) {
        const int a = arc.ys[static_cast<std::size_t>(p)];
        const int b = arc.ys[static_cast<std::size_t>(p + 1)];
        const VertexSet a_nb = g.neighbors(a) & x_set;

        // The proof needs |N(y_odd) n X| >= 2; fewer means the edge into
        // y_odd plus the unused successors form the forbidden pattern.
        if (a_nb.count() < 2) {
            const VertexSet cands = x_set - (g.neighbors(a) | g.neighbors(prev) |
                                             VertexSet{a, prev});
            if (cands.count() < k) throw ValidationError("claim4: pair-entry witness short");
            return induced_cert(g, k, prev, a, cands, "claim4-pair");
        }

        const VertexSet b_nb = g.neighbors(b) & x_set;
        if (b_nb.empty()) {
            prev = b;
            continue;
        }
        if (b_nb.count() == 1) {
            const int xi = b_nb.first();
            return induced_cert(g, k, b, xi, x_set.without(xi), "claim4-single");
        }

        const VertexSet common = a_nb & b_nb;
        if (common.count() >= 2) {
            // Case 1: two shared successors reroute both y's. Take the two
            // smallest attachment indices.
            const int i = min_index_with_successor_in(arc, common);
            const int j = min_index_with_successor_in(
                arc, common.without(arc.x_k1_list[static_cast<std::size_t>(i)]));
            return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, i, j),
                                     "claim4-case1", {p, i, j});
        }
        if (common.count() == 1) {
            // Case 2.
            const int i = attachment_index_of_successor(arc, common.first());
            if (i == 0) {
                int j = -1;
                for (int idx = 1; idx <= k && j < 0; ++idx)
                    if (b_nb.contains(arc.x_k1_list[static_cast<std::size_t>(idx)])) j = idx;
                if (j < 0) throw ValidationError("claim4 case2 i=1: second b-neighbor missing");
                return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, 0, j),
                                         "claim4-case2-i1", {p, 0, j});
            }
            if (i == k) {
                int j = -1;
                for (int idx = 0; idx < k && j < 0; ++idx)
                    if (a_nb.contains(arc.x_k1_list[static_cast<std::size_t>(idx)])) j = idx;
                if (j < 0) throw ValidationError("claim4 case2 i=k+1: second a-neighbor missing");
                return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, j, k),
                                         "claim4-case2-ik1", {p, j, k});
            }
            const int s_idx = min_index_with_successor_in(arc, a_nb);
            const int l_idx = max_index_with_successor_in(arc, b_nb);
            if (s_idx < i)
                return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, s_idx, i),
                                         "claim4-case2-slti", {p, s_idx, i});
            if (l_idx > i)
                return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, i, l_idx),
                                         "claim4-case2-lgti", {p, i, l_idx});
            if (g.has_edge(x, a))
                return longer_cycle_cert(g, base_len, build_case2_xy1(g, s, arc, p, i),
                                         "claim4-case2-xy1", {p, i});
            if (s.x_all.contains(b))
                throw ValidationError("claim4: y_even is a successor though y_odd misses x");
            const VertexSet outer = g.neighbors(a) & high;
            if (!outer.empty()) {
                int h_idx = -1;
                for (int idx = k + 1; idx < s.t && h_idx < 0; ++idx)
                    if (outer.contains(s.successor_of_attachment(idx))) h_idx = idx;
                return longer_cycle_cert(g, base_len, build_outer(g, s, arc, p, i, h_idx),
                                         "claim4-case2-outer", {p, i, h_idx});
            }
            const VertexSet all_succ = s.x_all;
            const VertexSet seg1 =
                span_set(s, att_pos(s, i) + 1, s.position_of(a)) & all_succ;
            if (seg1.count() >= k + 1)
                return induced_cert(g, k, b, arc.x_k1_list[static_cast<std::size_t>(i)],
                                    seg1.without(arc.x_k1_list[static_cast<std::size_t>(i)]),
                                    "claim4-case2-seg1");
            const VertexSet seg2 =
                span_set(s, s.position_of(b), att_pos(s, i) + 1) & all_succ;
            if (seg2.count() >= k + 1)
                return induced_cert(g, k, a, arc.x_k1_list[static_cast<std::size_t>(i)],
                                    seg2.without(arc.x_k1_list[static_cast<std::size_t>(i)]),
                                    "claim4-case2-seg2");
            return not_2k_cert(g, s, k, "case 2 pigeonhole needs t >= 2k");
        }
        // Case 3: no common successor.
        const int s_idx = min_index_with_successor_in(arc, a_nb);
        const int l_idx = max_index_with_successor_in(arc, b_nb);
        if (s_idx == l_idx) throw ValidationError("claim4 case3 with s == l");
        if (s_idx < l_idx)
            return longer_cycle_cert(g, base_len, build_case1(g, s, arc, p, s_idx, l_idx),
                                     "claim4-case3-sltl", {p, s_idx, l_idx});
        if (g.has_edge(x, a))
            return longer_cycle_cert(g, base_len, build_case3_xy1(g, s, arc, p, l_idx),
                                     "claim4-case3-xy1", {p, l_idx});
        if (s.x_all.contains(b))
            throw ValidationError("claim4: y_even is a successor though y_odd misses x");
        const VertexSet outer = g.neighbors(a) & high;
        if (!outer.empty()) {
            int h_idx = -1;
            for (int idx = k + 1; idx < s.t && h_idx < 0; ++idx)
                if (outer.contains(s.successor_of_attachment(idx))) h_idx = idx;
            return longer_cycle_cert(g, base_len, build_outer(g, s, arc, p, l_idx, h_idx),
                                     "claim4-case3-outer", {p, l_idx, h_idx});
        }
        const VertexSet all_succ = s.x_all;
        const VertexSet seg1 = span_set(s, s.position_of(b), att_pos(s, s_idx)) & all_succ;
        if (seg1.count() >= k)
            return induced_cert(g, k, a, arc.x_k1_list[static_cast<std::size_t>(s_idx)], seg1,
                                "claim4-case3-seg1");
        const VertexSet seg2 =
            span_set(s, att_pos(s, s_idx) + 1, att_pos(s, k) + 1) & all_succ;
        if (seg2.count() >= k)
            return induced_cert(g, k, b, arc.x_k1_list[static_cast<std::size_t>(l_idx)],
                                seg2.without(arc.x_k1_list[static_cast<std::size_t>(l_idx)]),
                                "claim4-case3-seg2");
        return not_2k_cert(g, s, k, "case 3 pigeonhole needs t >= 2k");
    }

    // All pairs passed: re-verify N(Y) n X = {} and the Y independence
    // that follows from it.
    const VertexSet y = arc.y_set;
    if ((g.neighborhood_of(y) & x_set) != VertexSet())
        throw ValidationError("claim4 scan passed but Y touches X");
    for (std::uint64_t m = y.bits(); m; m &= m - 1) {
        const int ya = std::countr_zero(m);
        const VertexSet inner = g.neighbors(ya) & y;
        if (!inner.empty())
            return induced_cert(g, k, ya, inner.first(),
                                x_set - (g.neighbors(ya) | g.neighbors(inner.first())),
                                "claim4-y-edge");
    }
    return y;
}

Certificate final_cut(const Graph& g, const AttachmentStructure& s, VertexSet y, int k) {
    if (s.t < k + 1) throw InvalidSizeError("final_cut needs t >= k+1");
    std::uint64_t x_bits = 0;
    for (int i = 0; i <= k; ++i) x_bits |= 1ULL << s.successor_of_attachment(i);
    const VertexSet independent = VertexSet(x_bits) | y;
    // Hard validation: a dependent X u Y here is an engine bug, never data.
    for (std::uint64_t m = independent.bits(); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (g.neighbors(v).intersects(independent))
            throw ValidationError("final_cut: X u Y is not independent");
    }
    const VertexSet cut = g.vertices() - independent;
    const Rational ratio(cut.count(), independent.count());
    if (ratio < Rational(4)) return IndependentCutCert{independent, cut, ratio};
    return HypothesisFailureCert{HypothesisKind::n_too_small, independent, ratio,
                                 "final ratio at least 4; the paper's n >= 45 bound is unmet"};
}

namespace {

Certificate checked(const Graph& g, int k, std::optional<int> base_len, Certificate cert) {
    validate_certificate(g, k, base_len, cert);
    return cert;
}

}  // namespace

ReplayOutcome replay(const Graph& g, int k, std::optional<OrientedCycle> c,
                     const ReplayOptions& opts) {
    if (k < 4) throw InvalidSizeError("replay requires k >= 4");
    const int n = g.n();
    if (n < 3)
        return {std::nullopt,
                checked(g, k, std::nullopt,
                        HypothesisFailureCert{HypothesisKind::n_too_small, std::nullopt,
                                              std::nullopt, "fewer than three vertices"})};

    bool verified_longest = opts.cycle_verified_longest;
    if (!c) {
        c = longest_cycle(g, opts.caps);
        verified_longest = true;
        if (!c) {
            // Acyclic graphs have connectivity at most 1.
            auto cut = min_vertex_cut(g);
            if (!cut) throw ValidationError("acyclic graph without a vertex cut");
            int comps = static_cast<int>(components(remove_vertices(g, *cut)).size());
            return {std::nullopt,
                    checked(g, k, std::nullopt,
                            HypothesisFailureCert{HypothesisKind::not_2k_connected, *cut,
                                                  Rational(cut->count(), comps),
                                                  "graph has no cycle at all"})};
        }
    }

    if (c->length() == n) {
        ReplayOutcome out{*c, std::nullopt};
        validate_outcome(g, k, c->length(), out);
        return out;
    }

    const auto emit = [&](Certificate cert) -> ReplayOutcome {
        if (verified_longest && std::holds_alternative<LongerCycle>(cert))
            throw ValidationError(
                "longer cycle constructed against a verified longest cycle: engine bug");
        return {std::nullopt, checked(g, k, c->length(), std::move(cert))};
    };

    // The proof opens by consuming Lemma 2.1: a non-hamiltonian graph with
    // delta > n/5 - 1 cannot be 4-tough. Only sound when C is known
    // longest (otherwise non-hamiltonicity is not established).
    if (verified_longest) {
        const int delta = min_degree(g);
        if (Rational(5 * delta) > Rational(n - 5)) {
            const ToughnessResult tough = toughness(g, opts.caps);
            if (tough.infinite() || !(*tough.value < Rational(4)))
                throw ValidationError(
                    "Lemma 2.1 violated: non-hamiltonian, 4-tough, delta > n/5 - 1");
            const int comps =
                static_cast<int>(components(remove_vertices(g, tough.witness)).size());
            return emit(HypothesisFailureCert{HypothesisKind::not_4_tough, tough.witness,
                                              Rational(tough.witness.count(), comps),
                                              "minimum degree above n/5 - 1"});
        }
    }

    // Claims 1 and 2 for every exterior component, smallest label first.
    const VertexSet exterior = g.vertices() - c->vertex_set();
    std::uint64_t seen = 0;
    std::vector<VertexSet> comps;
    for (std::uint64_t m = exterior.bits(); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((seen >> v) & 1) continue;
        const VertexSet comp = component_of(g, v, exterior);
        seen |= comp.bits();
        comps.push_back(comp);
    }
    std::vector<AttachmentStructure> structures;
    for (const VertexSet comp : comps) {
        structures.push_back(attachment_structure_for(g, *c, k, comp));
        if (auto cert = claim1_check(g, structures.back())) return emit(std::move(*cert));
    }
    for (const AttachmentStructure& st : structures)
        if (auto cert = claim2_check(g, st, k)) return emit(std::move(*cert));

    if (auto cert = claim3_check(g, *c)) return emit(std::move(*cert));

    const AttachmentStructure& main = structures.front();
    if (main.t < k + 1 || !main.anchored) {
        auto scan =
            claim4_scan(g, main, ArcDecomposition{}, k);  // gates fire before the arc is read
        return emit(std::get<Certificate>(std::move(scan)));
    }
    const ArcDecomposition arc = arc_decomposition(g, main, k);
    VertexSet y;
    if (arc.h < 2) {
        y = VertexSet();  // degenerate arc: the proof's Y is empty
    } else {
        auto scan = claim4_scan(g, main, arc, k);
        if (std::holds_alternative<Certificate>(scan))
            return emit(std::get<Certificate>(std::move(scan)));
        y = std::get<VertexSet>(scan);
    }
    return emit(final_cut(g, main, y, k));
}

OrientedCycle rebuild_longer_cycle(const Graph& g, int k, const OrientedCycle& c,
                                   const LongerCycle& cert) {
    const std::string& tag = cert.tag;
    const std::vector<int>& pr = cert.params;
    if (tag.rfind("claim1", 0) == 0) {
        const VertexSet exterior = g.vertices() - c.vertex_set();
        const AttachmentStructure st =
            attachment_structure_for(g, c, k, component_of(g, pr.at(0), exterior));
        const std::vector<int> seq = tag == "claim1-consecutive"
                                         ? build_claim1_consecutive(g, st, pr.at(1))
                                         : build_claim1_chord(g, st, pr.at(1), pr.at(2));
        return OrientedCycle::from_order(seq, g);
    }
    const AttachmentStructure st = attachment_structure(g, c, k);
    const ArcDecomposition arc = arc_decomposition(g, st, k);
    std::vector<int> seq;
    if (tag == "claim4-case2-xy1")
        seq = build_case2_xy1(g, st, arc, pr.at(0), pr.at(1));
    else if (tag == "claim4-case3-xy1")
        seq = build_case3_xy1(g, st, arc, pr.at(0), pr.at(1));
    else if (tag == "claim4-case2-outer" || tag == "claim4-case3-outer")
        seq = build_outer(g, st, arc, pr.at(0), pr.at(1), pr.at(2));
    else
        seq = build_case1(g, st, arc, pr.at(0), pr.at(1), pr.at(2));
    return OrientedCycle::from_order(seq, g);
}

void validate_certificate(const Graph& g, int k, std::optional<int> base_cycle_len,
                          const Certificate& cert) {
    if (const auto* lc = std::get_if<LongerCycle>(&cert)) {
        if (!is_cycle_of(g, lc->cycle.order()))
            throw ValidationError("longer-cycle certificate is not a cycle of g");
        if (base_cycle_len && lc->cycle.length() <= *base_cycle_len)
            throw ValidationError("longer-cycle certificate not longer than C");
        return;
    }
    if (const auto* iw = std::get_if<InducedWitnessCert>(&cert)) {
        if (!freeness_witness_valid(g, k, iw->witness))
            throw ValidationError("induced witness invalid");
        return;
    }
    const auto check_cut = [&](VertexSet cut, const Rational& ratio, bool below4) {
        int comps = 0;
        VertexSet keep = g.vertices() - cut;
        std::uint64_t seen = 0;
        for (std::uint64_t m = keep.bits(); m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if ((seen >> v) & 1) continue;
            seen |= component_of(g, v, keep).bits();
            ++comps;
        }
        if (comps < 2) throw ValidationError("cut certificate: not a cutset");
        if (Rational(cut.count(), comps) != ratio)
            throw ValidationError("cut certificate: ratio mismatch");
        if (below4 && !(ratio < Rational(4)))
            throw ValidationError("cut certificate: ratio not below 4");
    };
    if (const auto* tc = std::get_if<ToughnessCutCert>(&cert)) {
        check_cut(tc->cutset, tc->ratio, true);
        return;
    }
    if (const auto* ic = std::get_if<IndependentCutCert>(&cert)) {
        for (std::uint64_t m = ic->independent.bits(); m; m &= m - 1)
            if (g.neighbors(std::countr_zero(m)).intersects(ic->independent))
                throw ValidationError("independent-cut: set not independent");
        if (ic->cutset != g.vertices() - ic->independent)
            throw ValidationError("independent-cut: cutset is not the complement");
        if (ic->independent.count() < 2) throw ValidationError("independent-cut: trivial");
        check_cut(ic->cutset, ic->ratio, true);
        return;
    }
    const auto& hf = std::get<HypothesisFailureCert>(cert);
    switch (hf.which) {
        case HypothesisKind::not_4_tough:
            if (!hf.witness || !hf.ratio) throw ValidationError("not-4-tough without witness");
            check_cut(*hf.witness, *hf.ratio, true);
            break;
        case HypothesisKind::not_2k_connected: {
            if (!hf.witness) throw ValidationError("not-2k-connected without witness");
            if (hf.witness->count() >= 2 * k)
                throw ValidationError("not-2k-connected cut too large");
            int comps = 0;
            VertexSet keep = g.vertices() - *hf.witness;
            std::uint64_t seen = 0;
            for (std::uint64_t m = keep.bits(); m; m &= m - 1) {
                const int v = std::countr_zero(m);
                if ((seen >> v) & 1) continue;
                seen |= component_of(g, v, keep).bits();
                ++comps;
            }
            if (comps < 2) throw ValidationError("not-2k-connected witness not a cutset");
            break;
        }
        case HypothesisKind::not_free:
            throw ValidationError("not-free is never emitted by this engine");
        case HypothesisKind::n_too_small:
            if (hf.witness) {
                for (std::uint64_t m = hf.witness->bits(); m; m &= m - 1)
                    if (g.neighbors(std::countr_zero(m)).intersects(*hf.witness))
                        throw ValidationError("n-too-small witness set not independent");
                if (!hf.ratio ||
                    *hf.ratio != Rational(g.n() - hf.witness->count(), hf.witness->count()))
                    throw ValidationError("n-too-small ratio mismatch");
                if (*hf.ratio < Rational(4))
                    throw ValidationError("n-too-small carries a ratio below 4");
            } else if (g.n() >= 3) {
                throw ValidationError("n-too-small on a graph with n >= 3 and no ratio");
            }
            break;
    }
}

void validate_outcome(const Graph& g, int k, std::optional<int> base_cycle_len,
                      const ReplayOutcome& outcome) {
    if (outcome.hamiltonian) {
        if (!is_cycle_of(g, outcome.hamiltonian->order()) ||
            outcome.hamiltonian->length() != g.n())
            throw ValidationError("hamiltonian outcome does not span g");
        return;
    }
    if (!outcome.certificate) throw ValidationError("outcome carries nothing");
    validate_certificate(g, k, base_cycle_len, *outcome.certificate);
}

}  // namespace toughham
