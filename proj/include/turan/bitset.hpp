#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan {

// Subset of a ground set {1,...,128}, stored as a fixed two-word bitmask.
// Vertex v occupies bit (v-1). operator< is the lexicographic order of the
// ascending vertex lists, so {1,4} < {2,3} and {1,2} < {1,2,3}.
class VertexSet {
public:
    static constexpr int max_vertices = 128;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    // {lo, lo+1, ..., hi}; empty when hi < lo.
    static VertexSet range(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v <= hi; ++v) s.insert(v);
        return s;
    }

    static void check_vertex(int v) {
        if (v < 1 || v > max_vertices)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " outside supported range 1.." + std::to_string(max_vertices));
    }

    void insert(int v) {
        check_vertex(v);
        w_[static_cast<unsigned>(v - 1) >> 6] |= bit(v);
    }

    void erase(int v) {
        check_vertex(v);
        w_[static_cast<unsigned>(v - 1) >> 6] &= ~bit(v);
    }

    bool contains(int v) const {
        return v >= 1 && v <= max_vertices && (w_[static_cast<unsigned>(v - 1) >> 6] & bit(v));
    }

    int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    bool intersects(const VertexSet& o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }

    bool is_subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    VertexSet operator&(const VertexSet& o) const { return VertexSet(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
    VertexSet operator|(const VertexSet& o) const { return VertexSet(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
    VertexSet operator-(const VertexSet& o) const { return VertexSet(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
    VertexSet operator^(const VertexSet& o) const { return VertexSet(w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]); }

    VertexSet& operator&=(const VertexSet& o) { w_[0] &= o.w_[0]; w_[1] &= o.w_[1]; return *this; }
    VertexSet& operator|=(const VertexSet& o) { w_[0] |= o.w_[0]; w_[1] |= o.w_[1]; return *this; }
    VertexSet& operator-=(const VertexSet& o) { w_[0] &= ~o.w_[0]; w_[1] &= ~o.w_[1]; return *this; }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

    // Lexicographic on ascending vertex lists. Let d be the smallest element
    // of the symmetric difference: below d the lists agree, so the owner of d
    // wins unless the other list is a strict prefix (has nothing beyond d).
    bool operator<(const VertexSet& o) const {
        for (int i = 0; i < 2; ++i) {
            std::uint64_t diff = w_[i] ^ o.w_[i];
            if (!diff) continue;
            const std::uint64_t low = diff & (~diff + 1);
            const int d = i * 64 + std::countr_zero(low) + 1;
            if (w_[i] & low) return o.max_vertex() > d;
            return max_vertex() < d;
        }
        return false;
    }

    // 0 when empty.
    int min_vertex() const {
        if (w_[0]) return std::countr_zero(w_[0]) + 1;
        if (w_[1]) return std::countr_zero(w_[1]) + 65;
        return 0;
    }

    int max_vertex() const {
        if (w_[1]) return 128 - std::countl_zero(w_[1]);
        if (w_[0]) return 64 - std::countl_zero(w_[0]);
        return 0;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < 2; ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(i * 64 + b + 1);
                w &= w - 1;
            }
        }
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

    std::uint64_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL;
        h ^= w_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    VertexSet(std::uint64_t a, std::uint64_t b) : w_{a, b} {}

    static std::uint64_t bit(int v) { return std::uint64_t{1} << ((v - 1) & 63); }

    std::array<std::uint64_t, 2> w_{0, 0};
};

using Edge = VertexSet;

}  // namespace turan
