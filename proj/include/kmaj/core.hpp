#ifndef KMAJ_CORE_HPP
#define KMAJ_CORE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kmaj {

// Dense zero-based vertex ids; external labels are an I/O concern.
using VertexId = int;

constexpr int kMaxVertices = 128;

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-width 128-bit vertex set. Two machine words keep the solver's
// inner loop (subset intersection with out-neighborhoods) branch-free.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.set(v);
        return s;
    }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
    }
    bool empty() const { return (w_[0] | w_[1]) == 0; }
    bool any() const { return !empty(); }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet s;
        s.w_[0] = w_[0] & o.w_[0];
        s.w_[1] = w_[1] & o.w_[1];
        return s;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet s;
        s.w_[0] = w_[0] | o.w_[0];
        s.w_[1] = w_[1] | o.w_[1];
        return s;
    }
    bool operator==(const VertexSet& o) const {
        return w_[0] == o.w_[0] && w_[1] == o.w_[1];
    }

    // Visits members in ascending id order.
    template <typename F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = w_[word];
            while (bits) {
                int v = word * 64 + __builtin_ctzll(bits);
                f(v);
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint64_t, 2> w_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// A linear order on 0..n-1. Position 0 is ranked first ("before" everything).
class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(std::vector<VertexId> ranking);

    static LinearOrder identity(int n);

    int size() const { return static_cast<int>(ranking_.size()); }
    const std::vector<VertexId>& ranking() const { return ranking_; }
    int position(VertexId v) const;
    LinearOrder reversed() const;

private:
    std::vector<VertexId> ranking_;
    std::vector<int> inv_position_;
};

bool before(const LinearOrder& order, VertexId u, VertexId v);

// k linear orders on a common ground set of size n.
struct Profile {
    std::vector<LinearOrder> orders;

    Profile() = default;
    explicit Profile(std::vector<LinearOrder> os);

    int k() const { return static_cast<int>(orders.size()); }
    int n() const { return orders.empty() ? 0 : orders.front().size(); }
    bool operator==(const Profile& o) const;
};

// Dense digraph with row-bitset out- and in-neighborhoods.
// No self-loops, never both directions.
class MajorityDigraph {
public:
    explicit MajorityDigraph(int n);

    int n() const { return n_; }
    bool has_edge(VertexId u, VertexId v) const { return out_[u].test(v); }
    void add_edge(VertexId u, VertexId v);
    const VertexSet& out(VertexId u) const { return out_[u]; }
    const VertexSet& in(VertexId v) const { return in_[v]; }
    int edge_count() const;
    std::vector<std::pair<VertexId, VertexId>> edges() const;
    bool operator==(const MajorityDigraph& o) const;

private:
    int n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

MajorityDigraph build_majority_digraph(const Profile& profile);
bool is_tournament(const MajorityDigraph& d);

}  // namespace kmaj

#endif  // KMAJ_CORE_HPP
