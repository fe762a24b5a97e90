#include "kmaj/solver.hpp"

#include <algorithm>
#include <atomic>
#include <list>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

namespace kmaj {

bool is_acyclic(const MajorityDigraph& d, const VertexSet& s) {
    // iterated source removal
    VertexSet rem = s;
    bool progress = true;
    while (rem.any() && progress) {
        progress = false;
        rem.for_each([&](int v) {
            if ((d.in(v) & rem).empty()) {
                rem.reset(v);
                progress = true;
            }
        });
    }
    return rem.empty();
}

std::optional<std::tuple<VertexId, VertexId, VertexId>> find_directed_triangle(
    const MajorityDigraph& d, const VertexSet& s) {
    const auto vs = s.members();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (d.has_edge(vs[i], vs[j]) == d.has_edge(vs[j], vs[i]))
                throw InputError(
                    "find_directed_triangle requires a tournament on s");

    for (VertexId u : vs) {
        VertexSet losers = d.out(u) & s;
        std::optional<std::tuple<VertexId, VertexId, VertexId>> found;
        losers.for_each([&](int v) {
            if (found) return;
            VertexSet closers = d.out(v) & d.in(u) & s;
            if (closers.any()) {
                int w = closers.members().front();
                found = std::tuple<VertexId, VertexId, VertexId>(u, v, w);
            }
        });
        if (found) return found;
    }
    return std::nullopt;
}

namespace {

// Subset -> (a(S), chosen dominant vertex), bounded with LRU eviction.
class SubsetMemo {
public:
    explicit SubsetMemo(std::size_t cap) : cap_(cap == 0 ? 1 : cap) {}

    std::optional<std::pair<int, int>> lookup(const VertexSet& s) {
        std::lock_guard lock(mu_);
        auto it = map_.find(s);
        if (it == map_.end()) return std::nullopt;
        lru_.splice(lru_.begin(), lru_, it->second.lru);
        return std::pair(static_cast<int>(it->second.size),
                         static_cast<int>(it->second.chosen));
    }

    void insert(const VertexSet& s, int size, int chosen) {
        std::lock_guard lock(mu_);
        auto it = map_.find(s);
        if (it != map_.end()) return;
        if (map_.size() >= cap_) {
            map_.erase(lru_.back());
            lru_.pop_back();
        }
        lru_.push_front(s);
        map_.emplace(s, Entry{static_cast<std::int16_t>(size),
                              static_cast<std::int16_t>(chosen), lru_.begin()});
    }

private:
    struct Entry {
        std::int16_t size;
        std::int16_t chosen;
        std::list<VertexSet>::iterator lru;
    };
    std::size_t cap_;
    std::unordered_map<VertexSet, Entry, VertexSetHash> map_;
    std::list<VertexSet> lru_;
    std::mutex mu_;
};

class Solver {
public:
    Solver(const MajorityDigraph& d, const SolverOptions& opts)
        : d_(d), memo_(opts.memo_cap) {}

    // a(S) = 1 + max over v in S of a(S & N+(v)); exact despite the
    // per-node pruning, since skipped candidates cannot beat the local best.
    int solve(const VertexSet& s) {
        if (s.empty()) return 0;
        if (auto hit = memo_.lookup(s)) {
            memo_hits.fetch_add(1, std::memory_order_relaxed);
            return hit->first;
        }
        nodes_explored.fetch_add(1, std::memory_order_relaxed);

        const int total = s.count();
        std::vector<std::pair<int, int>> cands;  // (-outdeg within s, id)
        cands.reserve(static_cast<std::size_t>(total));
        s.for_each([&](int v) {
            cands.emplace_back(-(d_.out(v) & s).count(), v);
        });
        std::sort(cands.begin(), cands.end());

        int best = 0;
        int chosen = -1;
        for (auto [neg_deg, v] : cands) {
            if (1 - neg_deg <= best) continue;
            VertexSet sub = d_.out(v) & s;
            int val = 1 + solve(sub);
            if (val > best) {
                best = val;
                chosen = v;
            }
            if (best == total) break;
        }
        memo_.insert(s, best, chosen);
        return best;
    }

    const MajorityDigraph& d_;
    SubsetMemo memo_;
    std::atomic<std::uint64_t> nodes_explored{0};
    std::atomic<std::uint64_t> memo_hits{0};
};

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet s;
    while (mask) {
        s.set(__builtin_ctz(mask));
        mask &= mask - 1;
    }
    return s;
}

}  // namespace

SolveResult max_acyclic_set(const MajorityDigraph& d,
                            const SolverOptions& opts) {
    if (!is_tournament(d))
        throw InputError(
            "max_acyclic_set requires a tournament; use "
            "brute_force_max_acyclic for general digraphs");

    Solver solver(d, opts);
    const VertexSet full = VertexSet::full(d.n());

    int size;
    if (opts.threads > 1 && d.n() > 1) {
        // Evaluate top-level branches concurrently over the shared memo.
        // Values are exact, so the resulting size cannot depend on order.
        const auto vs = full.members();
        std::atomic<std::size_t> next{0};
        std::atomic<int> best{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= vs.size()) return;
                VertexSet sub = d.out(vs[i]) & full;
                if (1 + sub.count() <= best.load()) continue;
                int val = 1 + solver.solve(sub);
                int cur = best.load();
                while (val > cur && !best.compare_exchange_weak(cur, val)) {
                }
            }
        };
        std::vector<std::thread> pool;
        const int nthreads = std::min<int>(opts.threads, d.n());
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        size = best.load();
    } else {
        size = solver.solve(full);
    }

    // Canonical witness: at every level pick the smallest-id vertex whose
    // out-region still achieves the optimum. Independent of search order.
    SolveResult result;
    result.size = size;
    VertexSet s = full;
    while (s.any()) {
        const int target = solver.solve(s);
        for (VertexId v : s.members()) {
            VertexSet sub = d.out(v) & s;
            if (1 + solver.solve(sub) == target) {
                result.witness.set(v);
                s = sub;
                break;
            }
        }
    }
    result.nodes_explored = solver.nodes_explored.load();
    result.memo_hits = solver.memo_hits.load();
    return result;
}

SolveResult brute_force_max_acyclic(const MajorityDigraph& d) {
    const int n = d.n();
    if (n > 20)
        throw CapacityError("brute force oracle capped at n = 20, got n = " +
                            std::to_string(n));
    SolveResult result;
    if (n == 0) return result;

    for (int size = n; size >= 1; --size) {
        // Gosper's hack over all masks of the given popcount
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        const std::uint32_t limit = std::uint32_t{1} << n;
        while (mask < limit) {
            ++result.nodes_explored;
            VertexSet s = mask_to_set(mask);
            if (is_acyclic(d, s)) {
                result.size = size;
                result.witness = s;
                return result;
            }
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return result;
}

}  // namespace kmaj
