#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kedge/counting.hpp"
#include "kedge/decomposer.hpp"
#include "kedge/encodings.hpp"
#include "kedge/errors.hpp"
#include "kedge/structure_finders.hpp"

namespace py = pybind11;
using namespace kedge;

namespace {

py::int_ to_py(const BigInt &x) {
	return py::int_(py::module_::import("builtins").attr("int")(x.str()));
}

std::optional<BigInt> from_py(const std::optional<py::int_> &x) {
	if (!x)
		return std::nullopt;
	const std::string text = py::str(static_cast<py::handle>(*x)).cast<std::string>();
	return BigInt(text);
}

ThresholdOverrides overrides(const std::optional<py::int_> &pk, const std::optional<py::int_> &d0,
                             const std::optional<py::int_> &ramsey) {
	return ThresholdOverrides{from_py(ramsey), from_py(pk), from_py(d0)};
}

VertexSet as_set(const Graph &g, const std::vector<Vertex> &vs) { return Bitset::from_list(g.order(), vs); }

py::dict split_dict(const SplitParts &s) {
	py::dict d;
	d["v0"] = s.v0;
	d["v1"] = s.v1.to_vector();
	d["v2"] = s.v2.to_vector();
	d["b"] = s.b.to_vector();
	return d;
}

} // namespace

PYBIND11_MODULE(_kedge, m) {
	m.doc() = "k-edge induced subgraph solver";

	py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
	py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
	py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
	py::register_exception_translator([](std::exception_ptr p) {
		try {
			if (p)
				std::rethrow_exception(p);
		} catch (const ParseError &e) {
			PyErr_SetString(PyExc_ValueError, e.what());
		} catch (const PreconditionError &e) {
			PyErr_SetString(PyExc_ValueError, e.what());
		} catch (const RamseyExhausted &e) {
			PyErr_SetString(PyExc_RuntimeError, e.what());
		}
	});

	py::class_<Graph>(m, "Graph")
		.def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges) {
			std::vector<Edge> es;
			for (auto [u, v] : edges)
				es.push_back({u, v});
			return Graph::from_edges(n, es);
		}), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
		.def_static("parse", [](const std::string &text) { return parse_graph(text); }, py::arg("text"))
		.def_static("read", &read_graph_file, py::arg("path"))
		.def_property_readonly("order", &Graph::order)
		.def_property_readonly("edge_count", &Graph::edge_count)
		.def("degree", &Graph::degree)
		.def("adjacent", &Graph::adjacent)
		.def("label", &Graph::label)
		.def("neighbors", [](const Graph &g, Vertex v) { return g.neighbors(v).to_vector(); })
		.def("edges", [](const Graph &g) {
			std::vector<std::pair<Vertex, Vertex>> out;
			for (const Edge &e : g.edges())
				out.emplace_back(e.u, e.v);
			return out;
		})
		.def("complement", &Graph::complement)
		.def("__len__", &Graph::order)
		.def("__repr__", [](const Graph &g) {
			return "<kedge.Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
		});

	py::class_<Thresholds>(m, "Thresholds")
		.def(py::init([](std::uint64_t k, std::optional<py::int_> pk, std::optional<py::int_> d0,
		                 std::optional<py::int_> ramsey) { return Thresholds{k, overrides(pk, d0, ramsey)}; }),
		     py::arg("k"), py::kw_only(), py::arg("override_pk") = py::none(), py::arg("override_d0") = py::none(),
		     py::arg("override_ramsey") = py::none())
		.def_property_readonly("k", &Thresholds::k)
		.def_property_readonly("ramsey_bound", [](const Thresholds &t) { return to_py(t.ramsey_bound()); })
		.def_property_readonly("p_k", [](const Thresholds &t) { return to_py(t.p_k()); })
		.def_property_readonly("b_cap", [](const Thresholds &t) { return to_py(t.b_cap()); })
		.def_property_readonly("d0", [](const Thresholds &t) { return to_py(t.d0()); });

	py::class_<SolveResult>(m, "SolveResult")
		.def_property_readonly("yes", &SolveResult::yes)
		.def_property_readonly("witness", [](const SolveResult &r) -> std::optional<std::vector<Vertex>> {
			if (!r.witness)
				return std::nullopt;
			return r.witness->vertices;
		})
		.def_property_readonly("provenance", [](const SolveResult &r) -> std::optional<std::string> {
			if (!r.witness)
				return std::nullopt;
			return std::string(to_string(r.witness->provenance));
		})
		.def_readonly("route", &SolveResult::route)
		.def("__bool__", &SolveResult::yes);

	m.def("solve", [](const Graph &g, std::uint64_t k, std::optional<py::int_> pk, std::optional<py::int_> d0,
	                  std::optional<py::int_> ramsey) {
		return solve(g, k, SolverConfig::with_overrides(k, overrides(pk, d0, ramsey)));
	}, py::arg("graph"), py::arg("k"), py::kw_only(), py::arg("override_pk") = py::none(),
	   py::arg("override_d0") = py::none(), py::arg("override_ramsey") = py::none());

	m.def("decompose", [](const Graph &g, std::uint64_t k, std::optional<py::int_> pk, std::optional<py::int_> d0,
	                      std::optional<py::int_> ramsey) {
		const SolverConfig cfg = SolverConfig::with_overrides(k, overrides(pk, d0, ramsey));
		const DecomposeOutcome out = decompose(g, k, cfg);
		py::dict d;
		d["kind"] = std::string(to_string(out.kind));
		if (out.witness)
			d["witness"] = out.witness->vertices;
		if (out.split) {
			d["split"] = split_dict(*out.split);
			d["invariant_problem"] = check_split_invariants(g, *out.split, cfg.thresholds);
		}
		return d;
	}, py::arg("graph"), py::arg("k"), py::kw_only(), py::arg("override_pk") = py::none(),
	   py::arg("override_d0") = py::none(), py::arg("override_ramsey") = py::none());

	m.def("verify_witness", [](const Graph &g, const std::vector<Vertex> &vs, std::uint64_t k, bool strict) {
		if (vs.empty())
			return false;
		return verify_witness(g, as_set(g, vs), k, strict);
	}, py::arg("graph"), py::arg("vertices"), py::arg("k"), py::arg("strict") = false);

	m.def("count_eis", &count_eis, py::arg("graph"), py::arg("k"), py::arg("guard") = kDefaultCountGuard);
	m.def("count_eis_nice", &count_eis_nice, py::arg("graph"), py::arg("k"), py::arg("guard") = kDefaultCountGuard);
	m.def("count_independent_sets", &count_independent_sets, py::arg("graph"), py::arg("size"),
	      py::arg("guard") = kDefaultCountGuard);
	m.def("count_is_via_reduction", &count_is_via_reduction, py::arg("graph"), py::arg("k"),
	      py::arg("guard") = kDefaultCountGuard);

	m.def("eureka", [](std::uint64_t k) {
		const auto e = eureka(k);
		return py::make_tuple(e.k0, e.k1, e.k2);
	}, py::arg("k"));
	m.def("max_triangular_le", [](std::uint64_t k) {
		const auto s = max_triangular_le(k);
		return py::make_tuple(s.k0, s.r);
	}, py::arg("k"));

	m.def("is_degree_extreme", &is_degree_extreme, py::arg("graph"), py::arg("d"));
	m.def("is_scattered", [](const Graph &g, const std::vector<Vertex> &s, std::size_t ell, std::size_t r) {
		return is_scattered(g, as_set(g, s), ell, r);
	}, py::arg("graph"), py::arg("s"), py::arg("ell"), py::arg("r"));
}
