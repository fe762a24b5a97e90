#include "kmaj/core.hpp"

#include <algorithm>

namespace kmaj {

LinearOrder::LinearOrder(std::vector<VertexId> ranking)
    : ranking_(std::move(ranking)) {
    const int n = static_cast<int>(ranking_.size());
    inv_position_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        VertexId v = ranking_[p];
        if (v < 0 || v >= n)
            throw InputError("ranking entry " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n) + ")");
        if (inv_position_[v] != -1)
            throw InputError("ranking is not a permutation: vertex " +
                             std::to_string(v) + " repeated");
        inv_position_[v] = p;
    }
}

LinearOrder LinearOrder::identity(int n) {
    std::vector<VertexId> r(n);
    for (int i = 0; i < n; ++i) r[i] = i;
    return LinearOrder(std::move(r));
}

int LinearOrder::position(VertexId v) const {
    if (v < 0 || v >= size())
        throw InputError("vertex id " + std::to_string(v) + " out of range");
    return inv_position_[v];
}

LinearOrder LinearOrder::reversed() const {
    std::vector<VertexId> r(ranking_.rbegin(), ranking_.rend());
    return LinearOrder(std::move(r));
}

bool before(const LinearOrder& order, VertexId u, VertexId v) {
    return order.position(u) < order.position(v);
}

Profile::Profile(std::vector<LinearOrder> os) : orders(std::move(os)) {
    if (orders.empty()) throw InputError("profile needs at least one order");
    const int n = orders.front().size();
    if (n > kMaxVertices)
        throw CapacityError("ground set of size " + std::to_string(n) +
                            " exceeds cap of " + std::to_string(kMaxVertices));
    for (const auto& o : orders)
        if (o.size() != n)
            throw InputError("all orders of a profile must have equal length");
}

bool Profile::operator==(const Profile& o) const {
    if (orders.size() != o.orders.size()) return false;
    for (std::size_t i = 0; i < orders.size(); ++i)
        if (orders[i].ranking() != o.orders[i].ranking()) return false;
    return true;
}

MajorityDigraph::MajorityDigraph(int n) : n_(n), out_(n), in_(n) {
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxVertices) + "]");
}

void MajorityDigraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("self-loop rejected");
    if (out_[v].test(u)) throw InputError("antiparallel edge rejected");
    out_[u].set(v);
    in_[v].set(u);
}

int MajorityDigraph::edge_count() const {
    int c = 0;
    for (const auto& row : out_) c += row.count();
    return c;
}

std::vector<std::pair<VertexId, VertexId>> MajorityDigraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> es;
    es.reserve(static_cast<std::size_t>(edge_count()));
    for (VertexId u = 0; u < n_; ++u)
        out_[u].for_each([&](int v) { es.emplace_back(u, v); });
    return es;
}

bool MajorityDigraph::operator==(const MajorityDigraph& o) const {
    if (n_ != o.n_) return false;
    for (VertexId u = 0; u < n_; ++u)
        if (!(out_[u] == o.out_[u])) return false;
    return true;
}

MajorityDigraph build_majority_digraph(const Profile& profile) {
    const int n = profile.n();
    const int k = profile.k();
    MajorityDigraph d(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            int u_first = 0;
            for (const auto& order : profile.orders)
                if (before(order, u, v)) ++u_first;
            // strict majority; exact half (even k) leaves the pair tied
            if (2 * u_first > k)
                d.add_edge(u, v);
            else if (2 * (k - u_first) > k)
                d.add_edge(v, u);
        }
    }
    return d;
}

bool is_tournament(const MajorityDigraph& d) {
    for (VertexId u = 0; u < d.n(); ++u)
        for (VertexId v = u + 1; v < d.n(); ++v)
            if (d.has_edge(u, v) == d.has_edge(v, u)) return false;
    return true;
}

}  // namespace kmaj
