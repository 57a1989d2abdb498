#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "randic/catalog.hpp"
#include "randic/errors.hpp"
#include "randic/families.hpp"
#include "randic/graph.hpp"
#include "randic/permanent.hpp"
#include "randic/polynomial.hpp"
#include "randic/spectral.hpp"
#include "randic/verify.hpp"

namespace py = pybind11;
using namespace randic;

namespace {

py::object to_pyint(const BigInt& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list to_pyints(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_pyint(c));
    return out;
}

py::list to_fractions(const RatPolynomial& p) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::list out;
    for (const auto& c : p.coeffs()) out.append(fraction(c.get_str()));
    return out;
}

Family family_from_string(const std::string& name) {
    if (name == "friendship") return Family::friendship;
    if (name == "windmill4") return Family::windmill4;
    if (name == "windmill5") return Family::windmill5;
    if (name == "complete-bipartite-minus-edge" || name == "kmn-e")
        return Family::complete_bipartite_minus_edge;
    throw std::invalid_argument("unknown family '" + name + "'");
}

py::list report_lines(const CheckReport& r) {
    py::list out;
    for (const auto& line : r.lines) out.append(py::make_tuple(line.name, line.pass, line.detail));
    return out;
}

Spectrum spectrum_from_list(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values), 0.0};
}

py::dict witness_dict(const Witness& w) {
    py::dict d;
    d["family"] = to_string(w.spec.family);
    if (w.spec.family == Family::complete_bipartite_minus_edge) d["m"] = w.spec.m;
    d["n"] = w.spec.n;
    d["re_exact"] = w.re.str();
    d["re_float"] = w.re.value();
    return d;
}

}  // namespace

PYBIND11_MODULE(randicenergy, m) {
    m.doc() = "Graph energy and Randic energy: exact characteristic polynomials, "
              "permanents, the cubic-10 catalog, and closed-form families.";

    py::register_exception<ParseError>(m, "Graph6ParseError", PyExc_ValueError);
    py::register_exception<RegularityError>(m, "RegularityError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<CatalogMismatchError>(m, "CatalogMismatchError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree, py::arg("v"))
        .def("degrees", [](const Graph& g) { return g.degrees(); })
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("i"), py::arg("j"))
        .def("regularity", &Graph::regularity)
        .def("is_connected", &Graph::is_connected)
        .def("adjacency", &Graph::adjacency)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("cycle", &make_cycle, py::arg("m"));
    m.def("dutch_windmill", &make_dutch_windmill, py::arg("m"), py::arg("n"));
    m.def("friendship", &make_friendship, py::arg("n"));
    m.def("complete_bipartite_minus_edge", &make_complete_bipartite_minus_edge, py::arg("m"),
          py::arg("n"));
    m.def("petersen", &make_petersen);
    m.def("disjoint_union", &disjoint_union, py::arg("graphs"));
    m.def("graph6_encode", &graph6_encode, py::arg("g"));
    m.def("graph6_decode", &graph6_decode, py::arg("s"));

    m.def("charpoly", [](const Graph& g) { return to_pyints(charpoly_adjacency(g)); },
          py::arg("g"), "Exact characteristic polynomial, ascending coefficients.");
    m.def("charpoly_str", [](const Graph& g) { return charpoly_adjacency(g).str(); },
          py::arg("g"));
    m.def("lambda_recurrence", [](int k) { return to_fractions(lambda_recurrence(k)); },
          py::arg("k"));
    m.def("randic_charpoly_cycle", [](int mm) { return to_fractions(randic_charpoly_cycle(mm)); },
          py::arg("m"));
    m.def("randic_charpoly_regular",
          [](const Graph& g, int k) { return to_fractions(randic_charpoly_regular(g, k)); },
          py::arg("g"), py::arg("k"));
    m.def("randic_charpoly_windmill",
          [](int mm, int n) { return to_fractions(randic_charpoly_windmill(mm, n)); },
          py::arg("m"), py::arg("n"));

    m.def("energy", &energy, py::arg("g"));
    m.def("randic_energy", &randic_energy, py::arg("g"));
    m.def("adjacency_spectrum",
          [](const Graph& g) { return eigenvalues_symmetric(adjacency_matrix(g)).values; },
          py::arg("g"), "Adjacency eigenvalues, non-increasing.");
    m.def("randic_spectrum",
          [](const Graph& g) { return eigenvalues_symmetric(randic_matrix(g)).values; },
          py::arg("g"), "Randic-matrix eigenvalues, non-increasing.");
    m.def("spectra_difference",
          [](std::vector<double> a, std::vector<double> b, double tol) {
              return spectra_difference(spectrum_from_list(std::move(a)),
                                        spectrum_from_list(std::move(b)), tol);
          },
          py::arg("a"), py::arg("b"), py::arg("tol") = 1e-6);
    m.def("energy_report", [](const Graph& g, const std::string& id) {
              EnergyReport r = make_energy_report(g, id);
              py::dict d;
              d["id"] = r.id;
              d["n"] = r.n;
              d["edges"] = r.edges;
              d["energy"] = r.energy;
              d["randic_energy"] = r.randic_energy;
              d["method"] = to_string(r.method);
              d["spectrum"] = r.spectrum;
              return d;
          },
          py::arg("g"), py::arg("id") = "");

    m.def("permanent", [](const Graph& g) { return to_pyint(permanent_of_graph(g)); },
          py::arg("g"), "Exact permanent of the adjacency matrix (Ryser).");
    m.def("permanent_matrix",
          [](const std::vector<std::vector<long long>>& rows) {
              return to_pyint(permanent_ryser(IntMatrix::from_rows(rows)));
          },
          py::arg("rows"));

    m.def("enumerate_cubic", &enumerate_cubic, py::arg("n"),
          "Cubic graphs of order n (even, 4..10), one per cospectrality class.");

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_readonly("name", &CatalogEntry::name)
        .def_readonly("graph", &CatalogEntry::graph)
        .def_readonly("graph6", &CatalogEntry::graph6)
        .def_readonly("energy", &CatalogEntry::energy)
        .def_readonly("randic_energy", &CatalogEntry::randic_energy)
        .def_readonly("connected", &CatalogEntry::connected)
        .def_property_readonly("charpoly",
                               [](const CatalogEntry& e) { return to_pyints(e.charpoly); })
        .def_property_readonly("permanent",
                               [](const CatalogEntry& e) { return to_pyint(e.permanent); })
        .def("__repr__", [](const CatalogEntry& e) { return "<CatalogEntry " + e.name + ">"; });

    m.def("catalog", []() { return catalog(); },
          "The 21 cubic graphs of order 10, named by reference polynomial.");
    m.def("equivalence_classes",
          [](const std::string& key, double tol) {
              EnergyKey k = key == "energy" ? EnergyKey::energy : EnergyKey::randic;
              return equivalence_classes(catalog(), k, tol).classes;
          },
          py::arg("key") = "energy", py::arg("tol") = 1e-6);

    m.def("closed_form_re",
          [](const std::string& family, int n, int mm) {
              FamilySpec spec{family_from_string(family), mm, n};
              ExactRE re = closed_form_re(spec);
              return py::make_tuple(re.str(), re.value());
          },
          py::arg("family"), py::arg("n"), py::arg("m") = 0,
          "Closed-form Randic energy as (exact string, float).");
    m.def("family_graph",
          [](const std::string& family, int n, int mm) {
              return family_graph({family_from_string(family), mm, n});
          },
          py::arg("family"), py::arg("n"), py::arg("m") = 0);
    m.def("density_probe",
          [](double lo, double hi, int max_witnesses) {
              py::list out;
              for (const auto& w : density_probe(lo, hi, max_witnesses))
                  out.append(witness_dict(w));
              return out;
          },
          py::arg("lo"), py::arg("hi"), py::arg("max_witnesses") = 1000);

    m.def("verify_tables", [](double tol) { return report_lines(verify_tables(tol)); },
          py::arg("tol") = 2e-4);
    m.def("verify_closed_forms",
          [](int max_n, double tol) { return report_lines(verify_closed_forms(max_n, tol)); },
          py::arg("max_n") = 8, py::arg("tol") = 1e-8);
    m.def("verify_census", []() { return report_lines(verify_census()); });
    m.def("verify_classes", [](double tol) { return report_lines(verify_classes(tol)); },
          py::arg("tol") = 1e-6);
    m.def("verify_windmill", [](double tol) { return report_lines(verify_windmill(tol)); },
          py::arg("tol") = 1e-8);
    m.def("verify_all", [](double tables_tol) { return report_lines(verify_all(tables_tol)); },
          py::arg("tables_tol") = 2e-4);
}
