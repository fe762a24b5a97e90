#include <doctest.h>

#include "kmaj/core.hpp"
#include "kmaj/io.hpp"

using namespace kmaj;

namespace {

Profile make_profile(std::vector<std::vector<VertexId>> rankings) {
    std::vector<LinearOrder> orders;
    for (auto& r : rankings) orders.push_back(LinearOrder(std::move(r)));
    return Profile(std::move(orders));
}

}  // namespace

TEST_CASE("before follows positions in the order") {
    LinearOrder identity({0, 1, 2});
    CHECK(before(identity, 0, 2));
    LinearOrder reversed({2, 1, 0});
    CHECK_FALSE(before(reversed, 0, 2));
    LinearOrder mixed({1, 2, 0});
    CHECK(before(mixed, 2, 0));
    CHECK_THROWS_AS(before(identity, 0, 3), InputError);
}

TEST_CASE("linear order validation") {
    CHECK_THROWS_AS(LinearOrder({0, 0, 1}), InputError);
    CHECK_THROWS_AS(LinearOrder({0, 3, 1}), InputError);
    CHECK(LinearOrder::identity(4).position(2) == 2);
}

TEST_CASE("single order gives its transitive tournament") {
    auto d = build_majority_digraph(make_profile({{0, 1, 2}}));
    CHECK(d.has_edge(0, 1));
    CHECK(d.has_edge(0, 2));
    CHECK(d.has_edge(1, 2));
    CHECK(d.edge_count() == 3);
}

TEST_CASE("Condorcet cycle from three rotated orders") {
    auto d = build_majority_digraph(make_profile({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    CHECK(d.has_edge(0, 1));
    CHECK(d.has_edge(1, 2));
    CHECK(d.has_edge(2, 0));
    CHECK(d.edge_count() == 3);
}

TEST_CASE("even k ties produce no edges") {
    auto d = build_majority_digraph(make_profile({{0, 1}, {1, 0}}));
    CHECK(d.edge_count() == 0);
    CHECK_FALSE(is_tournament(d));
}

TEST_CASE("is_tournament") {
    auto odd = build_majority_digraph(make_profile({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    CHECK(is_tournament(odd));
    CHECK(is_tournament(MajorityDigraph(1)));
    CHECK(is_tournament(MajorityDigraph(0)));
    CHECK_FALSE(is_tournament(MajorityDigraph(2)));
}

TEST_CASE("profile validation and caps") {
    CHECK_THROWS_AS(Profile(std::vector<LinearOrder>{}), InputError);
    CHECK_THROWS_AS(
        Profile({LinearOrder::identity(2), LinearOrder::identity(3)}),
        InputError);
    CHECK_THROWS_AS(Profile({LinearOrder::identity(129)}), CapacityError);
    CHECK_NOTHROW(Profile({LinearOrder::identity(128)}));
}

TEST_CASE("odd-k profiles yield tournaments") {
    for (int k : {1, 3, 5}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            int n = 2 + static_cast<int>(seed % 11);
            auto d = build_majority_digraph(random_profile(n, k, seed * 31 + k));
            CHECK(is_tournament(d));
        }
    }
}

TEST_CASE("tripling each order leaves the digraph unchanged") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = random_profile(8, 3, seed);
        std::vector<LinearOrder> tripled;
        for (const auto& o : p.orders)
            for (int c = 0; c < 3; ++c) tripled.push_back(o);
        CHECK(build_majority_digraph(p) ==
              build_majority_digraph(Profile(std::move(tripled))));
    }
}

TEST_CASE("reversing every order reverses every edge") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = random_profile(9, 3, seed + 100);
        std::vector<LinearOrder> rev;
        for (const auto& o : p.orders) rev.push_back(o.reversed());
        auto d = build_majority_digraph(p);
        auto dr = build_majority_digraph(Profile(std::move(rev)));
        for (int u = 0; u < d.n(); ++u)
            for (int v = 0; v < d.n(); ++v)
                if (u != v) CHECK(d.has_edge(u, v) == dr.has_edge(v, u));
    }
}

TEST_CASE("digraph rejects loops and antiparallel edges") {
    MajorityDigraph d(3);
    d.add_edge(0, 1);
    CHECK_THROWS_AS(d.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(d.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(MajorityDigraph(129), CapacityError);
}
