#include "kmaj/triangle.hpp"

#include <algorithm>
#include <numeric>

namespace kmaj {

std::vector<TriPoint> enumerate_points(int r) {
    if (r < 0) throw InputError("r must be nonnegative");
    std::vector<TriPoint> pts;
    pts.reserve(static_cast<std::size_t>(r) * (r + 1) / 2);
    for (int x = 0; x <= r - 1; ++x)
        for (int y = 0; y <= r - 1 - x; ++y)
            pts.push_back({x, y, r - 1 - x - y});
    return pts;
}

Profile lex_orders(int r) {
    if (r < 1) throw InputError("r must be positive");
    const auto pts = enumerate_points(r);
    const int n = static_cast<int>(pts.size());

    auto sorted_ids = [&](auto cmp) {
        std::vector<VertexId> ids(n);
        std::iota(ids.begin(), ids.end(), 0);
        std::sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
            return cmp(pts[a], pts[b]);
        });
        return LinearOrder(std::move(ids));
    };

    std::vector<LinearOrder> orders;
    orders.push_back(sorted_ids([](const TriPoint& a, const TriPoint& b) {
        return std::pair(a.x, a.y) < std::pair(b.x, b.y);
    }));
    orders.push_back(sorted_ids([](const TriPoint& a, const TriPoint& b) {
        return std::pair(a.y, a.z) < std::pair(b.y, b.z);
    }));
    orders.push_back(sorted_ids([](const TriPoint& a, const TriPoint& b) {
        return std::pair(a.z, a.x) < std::pair(b.z, b.x);
    }));
    return Profile(std::move(orders));
}

EdgeDirection compass_edge(const TriPoint& p, const TriPoint& q) {
    if (p == q) throw InputError("compass_edge needs two distinct points");
    if (p.x + p.y + p.z != q.x + q.y + q.z)
        throw InputError("points belong to different lattices");

    const bool p_first = (p.x < q.x && p.y < q.y) || (p.y < q.y && p.z < q.z) ||
                         (p.z < q.z && p.x < q.x) || (p.x == q.x && p.y < q.y) ||
                         (p.y == q.y && p.z < q.z) || (p.z == q.z && p.x < q.x);
    return p_first ? EdgeDirection::forward : EdgeDirection::backward;
}

TriangleConstruction make_triangle_construction(int r) {
    if (r < 1) throw InputError("r must be positive");
    if (r > kMaxTriangleR)
        throw CapacityError("r = " + std::to_string(r) + " exceeds cap " +
                            std::to_string(kMaxTriangleR));
    TriangleConstruction c;
    c.r = r;
    c.points = enumerate_points(r);
    c.profile = lex_orders(r);
    return c;
}

MajorityDigraph build_triangle_tournament(int r) {
    return build_majority_digraph(make_triangle_construction(r).profile);
}

}  // namespace kmaj
