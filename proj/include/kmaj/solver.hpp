#ifndef KMAJ_SOLVER_HPP
#define KMAJ_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <tuple>

#include "kmaj/core.hpp"

namespace kmaj {

struct SolveResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::uint64_t memo_hits = 0;
};

struct SolverOptions {
    std::size_t memo_cap = std::size_t{1} << 22;  // entries, LRU beyond
    int threads = 1;
};

bool is_acyclic(const MajorityDigraph& d, const VertexSet& s);

// For a tournament restricted to s, acyclicity is equivalent to having no
// directed 3-cycle; this returns one such cycle as a certificate.
std::optional<std::tuple<VertexId, VertexId, VertexId>> find_directed_triangle(
    const MajorityDigraph& d, const VertexSet& s);

// Exact maximum acyclic set via the dominant-vertex recursion
// a(S) = 1 + max over v in S of a(S & N+(v)), with memoized subsets and
// branch-and-bound pruning. Tournaments only.
SolveResult max_acyclic_set(const MajorityDigraph& d,
                            const SolverOptions& opts = {});

// Independent 2^n oracle; handles arbitrary digraphs (including even-k
// ties). Enumerates subsets by decreasing size with early exit.
SolveResult brute_force_max_acyclic(const MajorityDigraph& d);

}  // namespace kmaj

#endif  // KMAJ_SOLVER_HPP
