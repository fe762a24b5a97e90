#include "kmaj/io.hpp"

#include <sstream>

#include <json.hpp>

#include "kmaj/bounds.hpp"

namespace kmaj {

using nlohmann::json;

std::string profile_to_json(const Profile& profile,
                            const std::vector<std::string>& labels) {
    json j;
    j["n"] = profile.n();
    j["k"] = profile.k();
    auto& orders = j["orders"] = json::array();
    for (const auto& o : profile.orders) orders.push_back(o.ranking());
    if (!labels.empty()) j["labels"] = labels;
    return j.dump(2) + "\n";
}

Profile profile_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed profile JSON: ") + e.what());
    }
    try {
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        std::vector<LinearOrder> orders;
        for (const auto& arr : j.at("orders"))
            orders.push_back(LinearOrder(arr.get<std::vector<VertexId>>()));
        Profile p(std::move(orders));
        if (p.n() != n || p.k() != k)
            throw InputError("profile JSON n/k fields disagree with orders");
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid profile JSON: ") + e.what());
    }
}

std::string digraph_to_json(const MajorityDigraph& d) {
    json j;
    j["n"] = d.n();
    auto& edges = j["edges"] = json::array();
    for (auto [u, v] : d.edges()) edges.push_back(json::array({u, v}));
    return j.dump(2) + "\n";
}

MajorityDigraph digraph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed digraph JSON: ") + e.what());
    }
    try {
        MajorityDigraph d(j.at("n").get<int>());
        for (const auto& e : j.at("edges"))
            d.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        return d;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid digraph JSON: ") + e.what());
    }
}

std::string export_dot(const MajorityDigraph& d,
                       const std::vector<TriPoint>& coords) {
    std::ostringstream out;
    out << "digraph {\n";
    for (std::size_t v = 0; v < coords.size(); ++v)
        out << "  // " << v << " = (" << coords[v].x << "," << coords[v].y
            << "," << coords[v].z << ")\n";
    for (auto [u, v] : d.edges()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("empty draw range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

LinearOrder random_permutation(int n, SeededRng& rng) {
    std::vector<VertexId> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[i] = i;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(r[i], r[j]);
    }
    return LinearOrder(std::move(r));
}

Profile random_profile(int n, int k, std::uint64_t seed) {
    if (k < 1) throw InputError("k must be at least 1");
    if (n < 1) throw InputError("n must be at least 1");
    if (n > kMaxVertices)
        throw CapacityError("n exceeds cap of " + std::to_string(kMaxVertices));
    SeededRng rng(seed);
    std::vector<LinearOrder> orders;
    orders.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) orders.push_back(random_permutation(n, rng));
    return Profile(std::move(orders));
}

SearchResult search_min_acyclic(int n, int k, std::uint64_t seed,
                                std::uint64_t iterations,
                                const SolverOptions& opts) {
    if (k % 2 == 0) throw InputError("search requires odd k");
    SearchResult result;
    SeededRng seeder(seed);
    const int floor = ceil_sqrt(n);
    for (std::uint64_t it = 0; it < iterations; ++it) {
        Profile p = random_profile(n, k, seeder.next());
        MajorityDigraph d = build_majority_digraph(p);
        int a = max_acyclic_set(d, opts).size;
        ++result.iterations;
        if (result.iterations == 1 || a < result.best_size) {
            result.best_size = a;
            result.best_profile = p;
        }
    }
    if (k == 3 && result.iterations > 0 && result.best_size < floor)
        result.anomaly = true;
    return result;
}

}  // namespace kmaj
