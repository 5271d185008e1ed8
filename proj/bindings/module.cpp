#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moorex/constructions.hpp"
#include "moorex/expansion.hpp"
#include "moorex/geronimus.hpp"
#include "moorex/graph.hpp"
#include "moorex/moore.hpp"
#include "moorex/report.hpp"
#include "moorex/spectral.hpp"

namespace py = pybind11;
using namespace moorex;

namespace {

py::object big_to_py(const BigInt& v) {
    // Exact conversion through the decimal representation.
    return py::cast<py::object>(py::module_::import("builtins").attr("int")(v.str()));
}

py::object rational_to_py(const Rational& v) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(boost::multiprecision::numerator(v).str() + "/" +
                    boost::multiprecision::denominator(v).str());
}

py::dict expansion_to_py(const ExpansionMeasurement& m) {
    py::dict d;
    d["h_e"] = rational_to_py(m.h_e);
    d["h_e_witness"] = m.h_e_witness;
    d["phi_v"] = rational_to_py(m.phi_v);
    d["phi_v_witness"] = m.phi_v_witness;
    return d;
}

Graph graph_from_family(const GeneratedGraph& gg) { return gg.graph; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degree-diameter graph toolkit: Moore bounds, spectra, "
              "non-backtracking walk certificates and exact expansion.";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, bool, EdgeList>(), py::arg("n"), py::arg("directed"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("directed", &Graph::is_directed)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.out_neighbors(v); })
        .def("in_neighbors", [](const Graph& g, int v) { return g.in_neighbors(v); })
        .def("has_edge", &Graph::has_edge)
        .def("adjacency_matrix", &Graph::adjacency_matrix)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) +
                   (g.is_directed() ? " directed>" : " undirected>");
        });

    m.def("degree_profile", [](const Graph& g) {
        const auto p = degree_profile(g);
        py::dict d;
        d["min_degree"] = p.min_out;
        d["max_degree"] = p.max_out;
        d["min_in_degree"] = p.min_in;
        d["max_in_degree"] = p.max_in;
        d["regular"] = p.is_regular;
        if (p.degree) d["degree"] = *p.degree;
        return d;
    });

    m.def("diameter", [](const Graph& g) -> py::object {
        const auto r = diameter(g);
        if (!r.diameter) return py::none();
        return py::int_(*r.diameter);
    });

    m.def("eccentricities", [](const Graph& g) { return diameter(g).eccentricity; });

    m.def("moore_bound",
          [](int d, int k) { return big_to_py(moore_bound(d, k)); },
          py::arg("d"), py::arg("k"));
    m.def("directed_moore_bound",
          [](int d, int k) { return big_to_py(directed_moore_bound(d, k)); },
          py::arg("d"), py::arg("k"));

    m.def("moore_profile", [](const Graph& g) {
        const auto p = moore_profile(g);
        py::dict d;
        d["d"] = p.d;
        d["k"] = p.k;
        d["directed"] = p.directed;
        d["mu"] = big_to_py(p.mu);
        d["n"] = big_to_py(*p.n);
        d["additive_gap"] = big_to_py(*p.additive_gap);
        d["alpha"] = rational_to_py(*p.alpha);
        d["epsilon"] = rational_to_py(*p.epsilon);
        return d;
    });

    m.def("geronimus_coeffs", [](int d, int t) {
        const auto p = geronimus_coeffs(d, t);
        py::list coeffs;
        for (const auto& c : p.coeffs) coeffs.append(big_to_py(c));
        return coeffs;
    });
    m.def("geronimus_value", &geronimus_value, py::arg("d"), py::arg("t"), py::arg("x"));

    m.def("spectrum", [](const Graph& g) {
        const auto s = spectrum(g);
        py::dict d;
        d["eigenvalues"] = s.eigenvalues;
        if (s.lambda_g) d["lambda_g"] = *s.lambda_g;
        if (s.spectral_gap) d["spectral_gap"] = *s.spectral_gap;
        d["solver_residual"] = s.solver_residual;
        return d;
    });

    m.def("spectral_bound_k2", [](int d, long long n) -> py::object {
        const auto b = spectral_bound_k2(d, BigInt(n));
        if (b.vacuous) return py::none();
        return py::float_(b.value);
    });

    m.def("exact_expansion",
          [](const Graph& g, int cap) { return expansion_to_py(exact_expansion(g, cap)); },
          py::arg("graph"), py::arg("cap") = kDefaultSubsetCap);

    m.def("analyze_json", [](const Graph& g, int exact_cap) {
        AnalyzeOptions opts;
        opts.exact_cap = exact_cap;
        return analyze_report(g, opts).dump();
    }, py::arg("graph"), py::arg("exact_cap") = kDefaultSubsetCap);

    m.def("parse_edge_list",
          [](const std::string& text) { return parse_edge_list(text); });
    m.def("to_edge_list", &to_edge_list);

    m.def("gen_cycle", [](int n) { return graph_from_family(gen_cycle(n)); });
    m.def("gen_complete", [](int n) { return graph_from_family(gen_complete(n)); });
    m.def("gen_complete_bipartite",
          [](int n) { return graph_from_family(gen_complete_bipartite(n)); });
    m.def("gen_petersen", [] { return graph_from_family(gen_petersen()); });
    m.def("gen_debruijn_digraph",
          [](int b, int k) { return graph_from_family(gen_debruijn_digraph(b, k)); });
    m.def("gen_debruijn_undirected",
          [](int b, int k) { return graph_from_family(gen_debruijn_undirected(b, k)); });
    m.def("gen_kautz", [](int d, int k) { return graph_from_family(gen_kautz(d, k)); });
    m.def("gen_polarity", [](int q) { return graph_from_family(gen_polarity(q)); });
    m.def("gen_two_cliques_bridged",
          [](int n) { return graph_from_family(gen_two_cliques_bridged(n)); });
}
