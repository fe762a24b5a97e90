#ifndef KMAJ_BOUNDS_HPP
#define KMAJ_BOUNDS_HPP

#include <vector>

#include "kmaj/core.hpp"
#include "kmaj/solver.hpp"

namespace kmaj {

struct BoundReport {
    int n = 0;
    int r = 0;
    int achieved = 0;      // a(G_r) from the exact solver
    double upper = 0.0;    // sqrt(2n) + 1/2
    int lower = 0;         // ceil(sqrt(n)); cited bound, empirical check only
    bool satisfied = false;
};

double f3_upper_bound(int n);

// The unique r with r(r-1)/2 < n <= r(r+1)/2.
int r_for_n(int n);

// Exact-integer form of r < sqrt(2n) + 1/2.
bool upper_bound_holds(int r, int n);

int ceil_sqrt(int n);

// Builds G_r, solves exactly, checks lower <= a(G_r) <= r and the
// upper-bound inequality.
BoundReport verify_construction(int r, int max_r = 8);

enum class WitnessKind { consistent, neutral };

struct ESWitness {
    WitnessKind kind = WitnessKind::consistent;
    std::vector<VertexId> members;  // in the order of the first input order

    int size() const { return static_cast<int>(members.size()); }
};

// Maximum subset appearing in the same relative order in both orders
// (longest increasing subsequence of b-positions read in a's order).
ESWitness longest_consistent(const LinearOrder& a, const LinearOrder& b);

// Maximum subset appearing in exactly opposite relative order (longest
// strictly decreasing subsequence in the same encoding).
ESWitness longest_neutral(const LinearOrder& a, const LinearOrder& b);

// For n > (r-1)(s-1): a consistent witness of size >= r or a neutral one
// of size >= s, preferring consistent when both exist.
ESWitness erdos_szekeres_witness(const LinearOrder& a, const LinearOrder& b,
                                 int r, int s);

}  // namespace kmaj

#endif  // KMAJ_BOUNDS_HPP
