#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace toughham {

// Subset of the vertex range [0, 64) as a single machine word.
// One-word set operations are what keeps the solvers fast, so everything
// here is inline and branch-light.
class VertexSet {
public:
    constexpr VertexSet() : bits_(0) {}
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vs) : bits_(0) {
        for (int v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }
    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    // First (smallest-label) vertex, or -1 on the empty set.
    constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    // Next vertex strictly above v, or -1.
    constexpr int next_after(int v) const {
        const std::uint64_t rest = v >= 63 ? 0 : bits_ & ~((bit(v) << 1) - 1);
        return rest ? std::countr_zero(rest) : -1;
    }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    // Order on equal-size sets by their sorted label sequences: the set
    // owning the smallest label in the symmetric difference comes first.
    // Used for every witness tie-break in the toolkit.
    static constexpr bool lex_less(VertexSet a, VertexSet b) {
        const std::uint64_t d = a.bits_ ^ b.bits_;
        if (d == 0) return false;
        return (d & (~d + 1)) & a.bits_;
    }

private:
    static constexpr std::uint64_t bit(int v) { return 1ULL << v; }
    std::uint64_t bits_;
};

// Ascending iteration: for (int v = s.first(); v >= 0; v = s.next_after(v)).
// Kept as member calls rather than an iterator type; the solvers usually
// iterate the raw bits with m &= m - 1 anyway.

}  // namespace toughham
