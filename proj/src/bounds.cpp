#include "kmaj/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "kmaj/triangle.hpp"

namespace kmaj {

double f3_upper_bound(int n) {
    if (n < 1) throw InputError("n must be positive");
    return std::sqrt(2.0 * n) + 0.5;
}

int r_for_n(int n) {
    if (n < 1) throw InputError("n must be positive");
    int r = 1;
    while (static_cast<long long>(r) * (r + 1) / 2 < n) ++r;
    return r;
}

bool upper_bound_holds(int r, int n) {
    // r < sqrt(2n) + 1/2  <=>  (2r-1)^2 < 8n, in exact integers
    const long long lhs = (2LL * r - 1) * (2LL * r - 1);
    return lhs < 8LL * n;
}

int ceil_sqrt(int n) {
    int l = 0;
    while (static_cast<long long>(l) * l < n) ++l;
    return l;
}

BoundReport verify_construction(int r, int max_r) {
    if (r < 1) throw InputError("r must be positive");
    if (r > max_r)
        throw CapacityError("r = " + std::to_string(r) +
                            " beyond exact-solve range (max " +
                            std::to_string(max_r) + ")");
    BoundReport rep;
    rep.r = r;
    rep.n = r * (r + 1) / 2;
    MajorityDigraph g = build_triangle_tournament(r);
    rep.achieved = max_acyclic_set(g).size;
    rep.upper = f3_upper_bound(rep.n);
    rep.lower = ceil_sqrt(rep.n);
    rep.satisfied = rep.lower <= rep.achieved && rep.achieved <= rep.r &&
                    upper_bound_holds(rep.r, rep.n);
    return rep;
}

namespace {

// Longest strictly increasing subsequence of seq, patience style,
// with predecessor reconstruction. Returns chosen indices, ascending.
std::vector<int> lis_indices(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> tails;        // tails[t]: index of smallest tail of length t+1
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(
            tails.begin(), tails.end(), seq[i],
            [&](int idx, int val) { return seq[idx] < val; });
        if (it != tails.begin()) parent[i] = *(it - 1);
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
    }
    std::vector<int> chosen;
    for (int i = tails.empty() ? -1 : tails.back(); i != -1; i = parent[i])
        chosen.push_back(i);
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

std::vector<int> positional_encoding(const LinearOrder& a,
                                     const LinearOrder& b) {
    if (a.size() != b.size())
        throw InputError("orders must share a ground set");
    std::vector<int> seq(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) seq[i] = b.position(a.ranking()[i]);
    return seq;
}

}  // namespace

ESWitness longest_consistent(const LinearOrder& a, const LinearOrder& b) {
    const auto seq = positional_encoding(a, b);
    ESWitness w;
    w.kind = WitnessKind::consistent;
    for (int i : lis_indices(seq)) w.members.push_back(a.ranking()[i]);
    return w;
}

ESWitness longest_neutral(const LinearOrder& a, const LinearOrder& b) {
    auto seq = positional_encoding(a, b);
    for (auto& v : seq) v = -v;  // decreasing = increasing of negation
    ESWitness w;
    w.kind = WitnessKind::neutral;
    for (int i : lis_indices(seq)) w.members.push_back(a.ranking()[i]);
    return w;
}

ESWitness erdos_szekeres_witness(const LinearOrder& a, const LinearOrder& b,
                                 int r, int s) {
    if (a.size() != b.size())
        throw InputError("orders must share a ground set");
    if (a.size() <= (r - 1) * (s - 1))
        throw InputError("guarantee needs n > (r-1)(s-1)");
    ESWitness cons = longest_consistent(a, b);
    if (cons.size() >= r) return cons;
    ESWitness neut = longest_neutral(a, b);
    if (neut.size() >= s) return neut;
    throw std::logic_error("Erdos-Szekeres guarantee violated");
}

}  // namespace kmaj
