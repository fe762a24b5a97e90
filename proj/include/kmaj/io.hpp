#ifndef KMAJ_IO_HPP
#define KMAJ_IO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kmaj/core.hpp"
#include "kmaj/solver.hpp"
#include "kmaj/triangle.hpp"

namespace kmaj {

// Profile JSON: {"n": <int>, "k": <int>, "orders": [[<ids>], ...]}
// with an optional "labels" array of external names.
std::string profile_to_json(const Profile& profile,
                            const std::vector<std::string>& labels = {});
Profile profile_from_json(const std::string& text);

// Digraph JSON: {"n": ..., "edges": [[u, v], ...]}, edges ascending.
std::string digraph_to_json(const MajorityDigraph& d);
MajorityDigraph digraph_from_json(const std::string& text);

// One "u -> v" line per edge, ascending (u, v). Triangle constructions
// add a comment per vertex with its (x, y, z).
std::string export_dot(const MajorityDigraph& d,
                       const std::vector<TriPoint>& coords = {});

// mt19937_64 with a hand-rolled bounded draw, so outputs are identical
// across platforms and standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // uniform draw in [0, bound) by rejection
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

LinearOrder random_permutation(int n, SeededRng& rng);  // Fisher-Yates
Profile random_profile(int n, int k, std::uint64_t seed);

struct SearchResult {
    int best_size = 0;
    Profile best_profile;
    std::uint64_t iterations = 0;
    bool anomaly = false;  // best_size fell below the cited ceil(sqrt(n))
};

// Random-restart probe for low-a(T) tournaments. Odd k only.
SearchResult search_min_acyclic(int n, int k, std::uint64_t seed,
                                std::uint64_t iterations,
                                const SolverOptions& opts = {});

}  // namespace kmaj

#endif  // KMAJ_IO_HPP
