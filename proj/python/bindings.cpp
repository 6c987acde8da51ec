// Python bindings. Graphs, actions, representations and quotients are
// exposed as opaque handles; files go through the same JSON formats as
// the command-line tool.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isograph/acceptance.hpp"
#include "isograph/catalog.hpp"
#include "isograph/io.hpp"
#include "isograph/irreps.hpp"

namespace py = pybind11;
using namespace isograph;

namespace {

SpectralOptions scan_options(int oversample, double tol_null, double resolution, bool negative) {
  SpectralOptions o;
  o.oversample = oversample;
  o.tol_null = tol_null;
  o.resolution = resolution;
  o.negative = negative;
  return o;
}

struct GroupHandle {
  GroupPtr group;
};

Subgroup subgroup_of(const GroupPtr& g, const std::vector<std::string>& names) {
  std::vector<int> elements;
  for (const std::string& n : names)
    elements.push_back(g->element(n));
  return subgroup_generated(g, elements);
}

}  // namespace

PYBIND11_MODULE(_isograph, m) {
  m.doc() = "Quotient quantum graphs and isospectrality checks";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<GroupHandle>(m, "Group")
      .def_property_readonly("order", [](const GroupHandle& h) { return h.group->order(); })
      .def_property_readonly("names", [](const GroupHandle& h) { return h.group->names(); })
      .def("element", [](const GroupHandle& h, const std::string& name) { return h.group->element(name); })
      .def("name", [](const GroupHandle& h, int x) { return h.group->name(x); })
      .def("mul", [](const GroupHandle& h, int a, int b) { return h.group->mul(a, b); })
      .def("inv", [](const GroupHandle& h, int a) { return h.group->inv(a); });
  m.def("builtin_group", [](const std::string& id) { return GroupHandle{builtin_group(id)}; }, py::arg("id"));

  py::class_<MetricGraph>(m, "Graph")
      .def_property_readonly("edge_count", &MetricGraph::edge_count)
      .def_property_readonly("vertex_count", &MetricGraph::vertex_count)
      .def_property_readonly("total_length", &MetricGraph::total_length)
      .def_property_readonly("edge_ids",
                             [](const MetricGraph& g) {
                               std::vector<std::string> ids;
                               for (const Edge& e : g.edges)
                                 ids.push_back(e.id);
                               return ids;
                             })
      .def_property_readonly("edge_lengths",
                             [](const MetricGraph& g) {
                               std::vector<double> l;
                               for (const Edge& e : g.edges)
                                 l.push_back(e.length);
                               return l;
                             })
      .def_property_readonly("vertex_ids",
                             [](const MetricGraph& g) {
                               std::vector<std::string> ids;
                               for (const Vertex& v : g.vertices)
                                 ids.push_back(v.id);
                               return ids;
                             })
      .def("conditions",
           [](const MetricGraph& g, const std::string& vertex) {
             const Vertex& v = g.vertices[g.vertex_index(vertex)];
             return py::make_tuple(v.A, v.B);
           })
      .def("is_self_adjoint", [](const MetricGraph& g) { return is_self_adjoint(g).overall; })
      .def("to_json", [](const MetricGraph& g) { return graph_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& text) { return graph_from_json(parse_json(text)); });

  py::class_<GraphAction>(m, "Action")
      .def_property_readonly("group", [](const GraphAction& a) { return GroupHandle{a.group}; })
      .def("to_json", [](const GraphAction& a, const MetricGraph& g) { return action_to_json(a, g).dump(); })
      .def_static("from_json", [](const std::string& text, const MetricGraph& g) {
        return action_from_json(parse_json(text), g);
      });

  py::class_<MatrixRep>(m, "Rep")
      .def_property_readonly("dim", &MatrixRep::dim)
      .def_property_readonly("group", [](const MatrixRep& r) { return GroupHandle{r.group()}; })
      .def_property_readonly("basis_label", &MatrixRep::basis_label)
      .def_property_readonly("elements",
                             [](const MatrixRep& r) {
                               std::vector<std::string> names;
                               for (int x : r.domain().elements)
                                 names.push_back(r.group()->name(x));
                               return names;
                             })
      .def("matrix", [](const MatrixRep& r, const std::string& x) { return r(r.group()->element(x)); })
      .def("character",
           [](const MatrixRep& r) {
             Character c = character(r);
             std::map<std::string, cplx> out;
             for (int x : r.domain().elements)
               out[r.group()->name(x)] = c(x);
             return out;
           })
      .def("induce", [](const MatrixRep& r) { return induce(r); })
      .def("restrict",
           [](const MatrixRep& r, const std::vector<std::string>& gens) {
             return restrict(r, subgroup_of(r.group(), gens));
           })
      .def("decompose",
           [](const MatrixRep& r) {
             IrrepTable t = builtin_irreps(r.group());
             std::map<std::string, int> out;
             std::vector<int> mult = decompose(r, t);
             for (size_t i = 0; i < mult.size(); ++i)
               out[t.names[i]] = mult[i];
             return out;
           })
      .def("is_isomorphic", [](const MatrixRep& a, const MatrixRep& b) { return is_isomorphic(a, b); })
      .def("to_json", [](const MatrixRep& r) { return rep_to_json(r).dump(); })
      .def_static("from_json", [](const std::string& text) { return rep_from_json(parse_json(text)); });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("k_max", &Spectrum::k_max)
      .def_readonly("warnings", &Spectrum::warnings)
      .def_property_readonly("entries",
                             [](const Spectrum& s) {
                               std::vector<std::pair<double, int>> out;
                               for (const SpectrumEntry& e : s.entries)
                                 out.emplace_back(e.k, e.multiplicity);
                               return out;
                             })
      .def("count", &Spectrum::count)
      .def("flat", &Spectrum::flat)
      .def("to_csv", [](const Spectrum& s) { return spectrum_to_csv(s); })
      .def_static("from_csv", [](const std::string& text) { return spectrum_from_csv(text); })
      .def("__len__", [](const Spectrum& s) { return s.entries.size(); });

  py::class_<SpectrumComparison>(m, "Comparison")
      .def_readonly("match", &SpectrumComparison::match)
      .def_readonly("compared", &SpectrumComparison::compared)
      .def_readonly("max_dk", &SpectrumComparison::max_dk)
      .def_readonly("mismatches", &SpectrumComparison::mismatches)
      .def("__bool__", [](const SpectrumComparison& c) { return c.match; });

  m.def(
      "eigenvalues",
      [](const MetricGraph& g, double k_max, int oversample, double tol_null, double resolution, bool negative) {
        py::gil_scoped_release release;
        return eigenvalues(g, k_max, scan_options(oversample, tol_null, resolution, negative));
      },
      py::arg("graph"), py::arg("k_max"), py::arg("oversample") = 8, py::arg("tol_null") = 1e-9,
      py::arg("resolution") = 1e-6, py::arg("negative") = false);
  m.def(
      "r_spectrum",
      [](const MetricGraph& g, const GraphAction& a, const MatrixRep& r, double k_max, int oversample) {
        py::gil_scoped_release release;
        return r_spectrum(g, a, r, k_max, scan_options(oversample, 1e-9, 1e-6, false));
      },
      py::arg("graph"), py::arg("action"), py::arg("rep"), py::arg("k_max"), py::arg("oversample") = 8);
  m.def("compare_spectra", &compare_spectra, py::arg("a"), py::arg("b"), py::arg("tol") = 1e-7,
        py::arg("max_entries") = 0);
  m.def("merge_spectra", &merge_spectra, py::arg("parts"), py::arg("tol") = 1e-7);

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("id", &CatalogEntry::id)
      .def_readonly("params", &CatalogEntry::params)
      .def_readonly("graph", &CatalogEntry::graph)
      .def_readonly("action", &CatalogEntry::action)
      .def_readonly("notes", &CatalogEntry::notes)
      .def_property_readonly("rep_names",
                             [](const CatalogEntry& e) {
                               std::vector<std::string> names;
                               for (const CatalogRep& r : e.reps)
                                 names.push_back(r.name);
                               return names;
                             })
      .def_property_readonly("subgroup_names",
                             [](const CatalogEntry& e) {
                               std::vector<std::string> names;
                               for (const NamedSubgroup& s : e.subgroups)
                                 names.push_back(s.name);
                               return names;
                             })
      .def("rep", [](const CatalogEntry& e, const std::string& name) { return e.rep(name).rep; })
      .def("quotient", [](const CatalogEntry& e, const std::string& rep) {
        return build_quotient(quotient_spec(e, rep));
      });
  m.def("catalog_ids", &catalog_ids);
  m.def("catalog_entry", &catalog_entry, py::arg("id"), py::arg("params") = std::vector<double>{});

  py::class_<QuotientGraph>(m, "Quotient")
      .def_readonly("graph", &QuotientGraph::graph)
      .def_readonly("rep", &QuotientGraph::rep)
      .def_readonly("d", &QuotientGraph::d)
      .def("to_json", [](const QuotientGraph& q) { return quotient_to_json(q).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return quotient_from_json(parse_json(text)).quotient; });
  m.def(
      "build_quotient",
      [](const MetricGraph& g, const GraphAction& a, const MatrixRep& r) {
        QuotientSpec spec{g, a, r, {}, {}, {}, {}};
        if (!quotient_readiness(g, a, r.domain()).no_edge_reversed)
          std::tie(spec.graph, spec.action) = ensure_quotient_ready(g, a, r.domain());
        return build_quotient(spec);
      },
      py::arg("graph"), py::arg("action"), py::arg("rep"));

  py::class_<TransplantMap>(m, "Transplant")
      .def_readonly("kind", &TransplantMap::kind)
      .def_readonly("provenance", &TransplantMap::provenance)
      .def_readonly("direct", &TransplantMap::direct)
      .def_readonly("reversed", &TransplantMap::reversed)
      .def_readonly("source", &TransplantMap::source)
      .def_readonly("target", &TransplantMap::target)
      .def("to_json", [](const TransplantMap& t) { return transplant_to_json(t).dump(); })
      .def_static("from_json", [](const std::string& text) { return transplant_from_json(parse_json(text)); });
  py::class_<TransplantReport>(m, "TransplantReport")
      .def_readonly("ok", &TransplantReport::ok)
      .def_readonly("checked", &TransplantReport::checked)
      .def_readonly("problems", &TransplantReport::problems)
      .def("__bool__", [](const TransplantReport& r) { return r.ok; });
  m.def(
      "basis_change_transplant",
      [](const QuotientGraph& q1, const QuotientGraph& q2) { return basis_change_transplant(q1, q2); },
      py::arg("source"), py::arg("target"));
  m.def(
      "induction_pair",
      [](const MetricGraph& g, const GraphAction& a, const MatrixRep& r) {
        CosetDecomposition c = left_cosets(r.domain());
        auto [sub, ind] = induction_specs(g, a, r, c);
        QuotientGraph qs = build_quotient(sub);
        QuotientGraph qi = build_quotient(ind);
        TransplantMap t = induction_transplant(qs, qi, c);
        return py::make_tuple(qs, qi, t);
      },
      py::arg("graph"), py::arg("action"), py::arg("rep"),
      "Quotient by rep, coordinated quotient by its induction and the transplant between them");
  m.def(
      "verify_transplant",
      [](const TransplantMap& t, int count) {
        py::gil_scoped_release release;
        return verify_transplant(t, count);
      },
      py::arg("transplant"), py::arg("count") = 10);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("title", &CriterionResult::title)
      .def_readonly("passed", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail)
      .def_readonly("seconds", &CriterionResult::seconds)
      .def("__str__", &format_result);
  m.def(
      "selfcheck",
      [](bool quick, unsigned seed, std::vector<int> only) {
        AcceptanceOptions o;
        o.quick = quick;
        o.seed = seed;
        o.only = std::move(only);
        py::gil_scoped_release release;
        return run_acceptance(o);
      },
      py::arg("quick") = true, py::arg("seed") = 12345, py::arg("only") = std::vector<int>{});
}
