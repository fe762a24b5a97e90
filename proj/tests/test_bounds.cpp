#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kmaj/bounds.hpp"
#include "kmaj/io.hpp"

using namespace kmaj;

namespace {

// Exhaustive oracle: checks whether the witness definition holds pairwise
// and whether any larger subset of the stated kind exists (small n only).
bool witness_valid(const ESWitness& w, const LinearOrder& a,
                   const LinearOrder& b) {
    for (std::size_t i = 0; i < w.members.size(); ++i)
        for (std::size_t j = i + 1; j < w.members.size(); ++j) {
            bool in_a = before(a, w.members[i], w.members[j]);
            bool in_b = before(b, w.members[i], w.members[j]);
            if (w.kind == WitnessKind::consistent && in_a != in_b) return false;
            if (w.kind == WitnessKind::neutral && in_a == in_b) return false;
        }
    return true;
}

int max_subset_size(const LinearOrder& a, const LinearOrder& b,
                    WitnessKind kind) {
    const int n = a.size();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        ESWitness w;
        w.kind = kind;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) w.members.push_back(v);
        std::sort(w.members.begin(), w.members.end(),
                  [&](int u, int v) { return before(a, u, v); });
        if (witness_valid(w, a, b))
            best = std::max(best, static_cast<int>(w.members.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("f3 upper bound closed form") {
    CHECK(f3_upper_bound(6) == doctest::Approx(std::sqrt(12.0) + 0.5));
    CHECK(f3_upper_bound(1) == doctest::Approx(std::sqrt(2.0) + 0.5));
    CHECK(f3_upper_bound(10) == doctest::Approx(std::sqrt(20.0) + 0.5));
    CHECK_THROWS_AS(f3_upper_bound(0), InputError);
}

TEST_CASE("r_for_n picks the unique bracketing r") {
    CHECK(r_for_n(6) == 3);
    CHECK(r_for_n(7) == 4);
    CHECK(r_for_n(1) == 1);
    for (int n = 1; n <= 1000; ++n) {
        int r = r_for_n(n);
        CHECK(r * (r - 1) / 2 < n);
        CHECK(n <= r * (r + 1) / 2);
    }
}

TEST_CASE("exact integer form of the upper bound") {
    for (int r = 1; r <= 15; ++r) {
        int n = r * (r + 1) / 2;
        CHECK(upper_bound_holds(r, n) == (r < std::sqrt(2.0 * n) + 0.5));
        CHECK(upper_bound_holds(r, n));
    }
}

TEST_CASE("verify_construction fixed rows") {
    auto r3 = verify_construction(3);
    CHECK(r3.n == 6);
    CHECK(r3.achieved == 3);
    CHECK(r3.upper == doctest::Approx(3.9641).epsilon(1e-4));
    CHECK(r3.lower == 3);
    CHECK(r3.satisfied);

    auto r1 = verify_construction(1);
    CHECK(r1.n == 1);
    CHECK(r1.achieved == 1);
    CHECK(r1.satisfied);

    auto r4 = verify_construction(4);
    CHECK(r4.n == 10);
    CHECK(r4.achieved == 4);
    CHECK(r4.lower == 4);
    CHECK(r4.satisfied);

    CHECK_THROWS_AS(verify_construction(9), CapacityError);
    CHECK_THROWS_AS(verify_construction(0), InputError);
}

TEST_CASE("longest consistent examples") {
    auto id5 = LinearOrder::identity(5);
    CHECK(longest_consistent(id5, id5).size() == 5);
    CHECK(longest_consistent(id5, id5.reversed()).size() == 1);

    LinearOrder b({2, 0, 1, 4, 3});
    auto w = longest_consistent(id5, b);
    CHECK(w.size() == 3);
    CHECK(witness_valid(w, id5, b));
    CHECK(max_subset_size(id5, b, WitnessKind::consistent) == 3);
}

TEST_CASE("longest neutral examples") {
    auto id5 = LinearOrder::identity(5);
    CHECK(longest_neutral(id5, id5.reversed()).size() == 5);
    CHECK(longest_neutral(id5, id5).size() == 1);

    LinearOrder b({2, 0, 1, 4, 3});
    auto w = longest_neutral(id5, b);
    CHECK(w.size() == 2);
    CHECK(witness_valid(w, id5, b));
    CHECK(max_subset_size(id5, b, WitnessKind::neutral) == 2);
}

TEST_CASE("longest subsequences match the exhaustive oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 8);
        auto p = random_profile(n, 2, seed + 11);
        const auto& a = p.orders[0];
        const auto& b = p.orders[1];
        auto cons = longest_consistent(a, b);
        auto neut = longest_neutral(a, b);
        CHECK(witness_valid(cons, a, b));
        CHECK(witness_valid(neut, a, b));
        CHECK(cons.size() == max_subset_size(a, b, WitnessKind::consistent));
        CHECK(neut.size() == max_subset_size(a, b, WitnessKind::neutral));
    }
}

TEST_CASE("symmetry of both lengths") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto p = random_profile(9, 2, seed + 500);
        const auto& a = p.orders[0];
        const auto& b = p.orders[1];
        CHECK(longest_consistent(a, b).size() ==
              longest_consistent(b, a).size());
        CHECK(longest_neutral(a, b).size() == longest_neutral(b, a).size());
    }
}

TEST_CASE("Erdos-Szekeres witness examples") {
    auto id5 = LinearOrder::identity(5);
    LinearOrder b({2, 0, 1, 4, 3});
    auto w = erdos_szekeres_witness(id5, b, 3, 3);
    CHECK(w.kind == WitnessKind::consistent);
    CHECK(w.size() >= 3);

    auto all = erdos_szekeres_witness(id5, id5, 5, 2);
    CHECK(all.kind == WitnessKind::consistent);
    CHECK(all.size() == 5);

    auto rev = erdos_szekeres_witness(id5, id5.reversed(), 2, 5);
    CHECK(rev.kind == WitnessKind::neutral);
    CHECK(rev.size() == 5);

    CHECK_THROWS_AS(erdos_szekeres_witness(id5, b, 6, 2), InputError);
}

TEST_CASE("Erdos-Szekeres guarantee over random pairs") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        auto p = random_profile(n, 2, seed * 13 + 3);
        int cons = longest_consistent(p.orders[0], p.orders[1]).size();
        int neut = longest_neutral(p.orders[0], p.orders[1]).size();
        for (int r = 1; r <= n + 1; ++r)
            for (int s = 1; s <= n + 1; ++s)
                if (n > (r - 1) * (s - 1)) CHECK((cons >= r || neut >= s));
    }
}
