#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmaj/bounds.hpp"
#include "kmaj/core.hpp"
#include "kmaj/io.hpp"
#include "kmaj/solver.hpp"
#include "kmaj/triangle.hpp"

namespace py = pybind11;
using namespace kmaj;

namespace {

Profile profile_from_lists(const std::vector<std::vector<int>>& orders) {
    std::vector<LinearOrder> os;
    os.reserve(orders.size());
    for (const auto& o : orders) os.push_back(LinearOrder(o));
    return Profile(std::move(os));
}

std::vector<std::vector<int>> profile_to_lists(const Profile& p) {
    std::vector<std::vector<int>> out;
    out.reserve(p.orders.size());
    for (const auto& o : p.orders) out.push_back(o.ranking());
    return out;
}

VertexSet set_from_list(const std::vector<int>& vs, int n) {
    VertexSet s;
    for (int v : vs) {
        if (v < 0 || v >= n) throw InputError("vertex id out of range");
        s.set(v);
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_kmaj, m) {
    m.doc() = "k-majority tournaments: construction, exact solving, bounds";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);

    py::class_<MajorityDigraph>(m, "MajorityDigraph")
        .def_property_readonly("n", &MajorityDigraph::n)
        .def("has_edge", &MajorityDigraph::has_edge)
        .def("edges", &MajorityDigraph::edges)
        .def("__repr__", [](const MajorityDigraph& d) {
            return "MajorityDigraph(n=" + std::to_string(d.n()) + ", edges=" +
                   std::to_string(d.edge_count()) + ")";
        });

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("size", &SolveResult::size)
        .def_property_readonly(
            "witness", [](const SolveResult& r) { return r.witness.members(); })
        .def_readonly("nodes_explored", &SolveResult::nodes_explored)
        .def_readonly("memo_hits", &SolveResult::memo_hits);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("r", &BoundReport::r)
        .def_readonly("achieved", &BoundReport::achieved)
        .def_readonly("upper", &BoundReport::upper)
        .def_readonly("lower", &BoundReport::lower)
        .def_readonly("satisfied", &BoundReport::satisfied);

    py::class_<ESWitness>(m, "ESWitness")
        .def_property_readonly("kind",
                               [](const ESWitness& w) {
                                   return w.kind == WitnessKind::consistent
                                              ? "consistent"
                                              : "neutral";
                               })
        .def_readonly("members", &ESWitness::members)
        .def_property_readonly("size", &ESWitness::size);

    m.def("build_majority_digraph",
          [](const std::vector<std::vector<int>>& orders) {
              return build_majority_digraph(profile_from_lists(orders));
          },
          py::arg("orders"));
    m.def("is_tournament", &is_tournament);

    m.def("enumerate_points", [](int r) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& p : enumerate_points(r))
            out.emplace_back(p.x, p.y, p.z);
        return out;
    });
    m.def("lex_orders",
          [](int r) { return profile_to_lists(lex_orders(r)); });
    m.def("compass_edge",
          [](std::tuple<int, int, int> p, std::tuple<int, int, int> q) {
              auto [px, py_, pz] = p;
              auto [qx, qy, qz] = q;
              return compass_edge({px, py_, pz}, {qx, qy, qz}) ==
                     EdgeDirection::forward;
          },
          "True iff the edge points p -> q");
    m.def("build_triangle_tournament", &build_triangle_tournament);

    m.def("is_acyclic",
          [](const MajorityDigraph& d, const std::vector<int>& s) {
              return is_acyclic(d, set_from_list(s, d.n()));
          });
    m.def("find_directed_triangle",
          [](const MajorityDigraph& d, const std::vector<int>& s) {
              return find_directed_triangle(d, set_from_list(s, d.n()));
          });
    m.def("max_acyclic_set",
          [](const MajorityDigraph& d, int threads) {
              SolverOptions opts;
              opts.threads = threads;
              return max_acyclic_set(d, opts);
          },
          py::arg("digraph"), py::arg("threads") = 1);
    m.def("brute_force_max_acyclic", &brute_force_max_acyclic);

    m.def("f3_upper_bound", &f3_upper_bound);
    m.def("r_for_n", &r_for_n);
    m.def("verify_construction", &verify_construction, py::arg("r"),
          py::arg("max_r") = 8);
    m.def("longest_consistent",
          [](const std::vector<int>& a, const std::vector<int>& b) {
              return longest_consistent(LinearOrder(a), LinearOrder(b));
          });
    m.def("longest_neutral",
          [](const std::vector<int>& a, const std::vector<int>& b) {
              return longest_neutral(LinearOrder(a), LinearOrder(b));
          });
    m.def("erdos_szekeres_witness",
          [](const std::vector<int>& a, const std::vector<int>& b, int r,
             int s) {
              return erdos_szekeres_witness(LinearOrder(a), LinearOrder(b), r,
                                            s);
          });

    m.def("random_profile", [](int n, int k, std::uint64_t seed) {
        return profile_to_lists(random_profile(n, k, seed));
    });
}
