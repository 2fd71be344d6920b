#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ladder/errors.hpp"
#include "ladder/gorenstein.hpp"
#include "ladder/invariants.hpp"
#include "ladder/lattice.hpp"
#include "ladder/minors.hpp"
#include "ladder/poset.hpp"
#include "ladder/shape.hpp"

namespace py = pybind11;
using namespace ladder;

namespace {

py::object to_py(const BigInt& x) {
  // exact big integers cross over as python ints via their decimal form
  return py::module_::import("builtins").attr("int")(x.str());
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const BigInt& x : xs) out.append(to_py(x));
  return out;
}

LadderShape as_shape(const py::object& obj) {
  if (py::isinstance<LadderShape>(obj)) return obj.cast<LadderShape>();
  if (py::isinstance<py::str>(obj)) return parse_shape(obj.cast<std::string>());
  std::vector<Interval> rows;
  for (const auto& pair : obj.cast<py::sequence>()) {
    auto uv = pair.cast<std::pair<int, int>>();
    rows.push_back({uv.first, uv.second});
  }
  return LadderShape(rows);
}

py::dict gorenstein_dict(const GorensteinReport& rep) {
  py::dict d;
  d["verdict"] = rep.verdict;
  d["method"] = to_text(rep.method);
  py::list witnesses;
  for (const Witness& w : rep.witnesses) {
    py::dict wd;
    wd["kind"] = w.kind;
    wd["indices"] = w.indices;
    wd["detail"] = w.detail;
    witnesses.append(wd);
  }
  d["witnesses"] = witnesses;
  py::dict oracles;
  if (rep.oracle_purity) oracles["purity"] = *rep.oracle_purity;
  if (rep.oracle_hvector) oracles["hvector"] = *rep.oracle_hvector;
  if (rep.oracle_joinirr) oracles["joinirr"] = *rep.oracle_joinirr;
  if (rep.oracle_direct_hilbert) oracles["direct_hilbert"] = *rep.oracle_direct_hilbert;
  d["oracles"] = oracles;
  d["f_regular"] = rep.f_regular;
  d["consistent"] = rep.consistent;
  return d;
}

OracleSet oracle_set(const std::vector<std::string>& names) {
  OracleSet set;
  for (const std::string& name : names) {
    if (name == "purity") set.purity = true;
    else if (name == "hvector") set.hvector = true;
    else if (name == "joinirr") set.joinirr = true;
    else if (name == "direct-hilbert" || name == "direct_hilbert") set.direct_hilbert = true;
    else throw std::invalid_argument("unknown oracle '" + name + "'");
  }
  return set;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ladder matrices: column-tuple lattices, join-irreducible posets, and "
            "Gorenstein decisions for special fiber rings";
  m.attr("__version__") = "0.1.0";

  py::register_exception<CapExceeded>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<LadderShape>(m, "Shape")
      .def(py::init([](const py::object& obj) { return as_shape(obj); }),
           "from a text form like '1-5,4-6' or a list of (u, v) pairs")
      .def_property_readonly("n", &LadderShape::rows)
      .def_property_readonly("m", &LadderShape::cols)
      .def_property_readonly("intervals",
                             [](const LadderShape& s) {
                               py::list out;
                               for (const Interval& iv : s.intervals())
                                 out.append(py::make_tuple(iv.lo, iv.hi));
                               return out;
                             })
      .def("text", &LadderShape::to_text)
      .def("__repr__",
           [](const LadderShape& s) { return "Shape('" + s.to_text() + "')"; })
      .def("__eq__", [](const LadderShape& a, const LadderShape& b) { return a == b; });

  m.def("parse_shape", [](const std::string& text) { return parse_shape(text); });
  m.def("validate", [](const py::object& shape) { return validate(as_shape(shape)).violations; });
  m.def("normalize", [](const py::object& shape) {
    NormalizeResult res = normalize(as_shape(shape));
    py::list steps;
    for (const NormalizationStep& s : res.trace) steps.append(s.to_text());
    return py::make_tuple(res.shape, steps);
  });

  m.def("gaps", [](const py::object& shape) {
    GapProfile g = gaps(as_shape(shape));
    py::dict d;
    d["delta"] = g.delta;
    py::list eps, theta;
    for (const Gap& e : g.eps) eps.append(e.is_unbounded() ? py::object(py::none()) : py::int_(e.value()));
    for (const Gap& t : g.theta) theta.append(t.is_unbounded() ? py::object(py::none()) : py::int_(t.value()));
    d["epsilon"] = eps;  // epsilon[j-1] = eps_j, None marks the unbounded sentinel
    d["theta"] = theta;  // theta[j] = theta_j
    return d;
  });

  m.def("blocks", [](const py::object& shape) {
    BlockDecomposition dec = blocks(as_shape(shape));
    py::list out;
    for (const Block& b : dec.blocks) out.append(py::make_tuple(b.p, b.q, b.i_min));
    py::dict d;
    d["cuts"] = dec.cuts;
    d["blocks"] = out;
    return d;
  });

  m.def("count_lattice", [](const py::object& shape) { return to_py(count_lattice(as_shape(shape))); });
  m.def(
      "enumerate_lattice",
      [](const py::object& shape, std::size_t cap) {
        Caps caps;
        caps.max_lattice = cap;
        return enumerate_lattice(as_shape(shape), cap);
      },
      py::arg("shape"), py::arg("cap") = Caps{}.max_lattice);

  m.def(
      "hibi_relations",
      [](const py::object& shape, int r) {
        py::list out;
        for (const HibiRelation& rel : hibi_relations(as_shape(shape), r)) out.append(rel.to_text());
        return out;
      },
      py::arg("shape"), py::arg("r") = 1);

  m.def(
      "multichain_hilbert",
      [](const py::object& shape, int r, int dmax) {
        return to_py(multichain_hilbert(as_shape(shape), r, dmax));
      },
      py::arg("shape"), py::arg("r"), py::arg("dmax"));

  m.def(
      "h_vector",
      [](const py::object& shape, int r) {
        HVector h = h_vector(as_shape(shape), r);
        py::dict d;
        d["coeffs"] = to_py(h.coeffs);
        d["dim"] = h.dim;
        d["degree"] = h.degree();
        d["symmetric"] = h.symmetric();
        return d;
      },
      py::arg("shape"), py::arg("r") = 1);

  py::class_<FinitePoset>(m, "Poset")
      .def_property_readonly("size", &FinitePoset::size)
      .def_property_readonly("elements",
                             [](const FinitePoset& p) {
                               py::list out;
                               for (const JoinIrr& e : p.elements())
                                 out.append(py::make_tuple(e.row, e.col));
                               return out;
                             })
      .def_property_readonly("covers", &FinitePoset::covers)
      .def_property_readonly("components", &FinitePoset::component_count)
      .def_property_readonly("component_labels", &FinitePoset::component_labels)
      .def_property_readonly("minimal",
                             [](const FinitePoset& p) {
                               py::list out;
                               for (int i : p.minimal_indices())
                                 out.append(py::make_tuple(p.at(i).row, p.at(i).col));
                               return out;
                             })
      .def_property_readonly("maximal",
                             [](const FinitePoset& p) {
                               py::list out;
                               for (int i : p.maximal_indices())
                                 out.append(py::make_tuple(p.at(i).row, p.at(i).col));
                               return out;
                             })
      .def_property_readonly("rank", [](const FinitePoset& p) { return poset_rank(p); })
      .def_property_readonly("pure", [](const FinitePoset& p) { return purity(p).pure; })
      .def("leq", [](const FinitePoset& p, int a, int b) { return p.leq(a, b); })
      .def("expand",
           [](const FinitePoset& p, int row, int col) {
             FiberPoint fp = expand({row, col}, p.shape(), p.copies());
             return py::make_tuple(fp.tuple, fp.copy);
           })
      .def("maximal_chains",
           [](const FinitePoset& p, std::size_t cap) { return maximal_chains(p, cap); },
           py::arg("cap") = Caps{}.max_chains)
      .def("dot", [](const FinitePoset& p) { return to_dot(p); })
      .def("grid", [](const FinitePoset& p) { return to_grid(p, p.shape()); })
      .def("__len__", &FinitePoset::size)
      .def("__repr__", [](const FinitePoset& p) {
        return "Poset(" + std::to_string(p.size()) + " elements)";
      });

  m.def(
      "join_irreducibles",
      [](const py::object& shape, int r) { return FinitePoset(as_shape(shape), r); },
      py::arg("shape"), py::arg("r") = 1);

  m.def(
      "join_irreducibles_oracle",
      [](const py::object& shape, int r) {
        py::list out;
        for (const FiberPoint& p : join_irreducibles_oracle(as_shape(shape), r))
          out.append(py::make_tuple(p.tuple, p.copy));
        return out;
      },
      py::arg("shape"), py::arg("r") = 1);

  m.def(
      "gorenstein",
      [](const py::object& shape, int r, const std::vector<std::string>& oracles) {
        return gorenstein_dict(decide_gorenstein(as_shape(shape), r, oracle_set(oracles)));
      },
      py::arg("shape"), py::arg("r") = 1,
      py::arg("oracles") = std::vector<std::string>{"purity"});

  m.def(
      "invariants",
      [](const py::object& shape, int r) {
        InvariantReport rep = invariants(as_shape(shape), r);
        py::dict d;
        d["p_size"] = rep.p_size;
        d["rank"] = rep.rank;
        d["reg"] = rep.reg;
        d["reduction_number"] = rep.reduction_number;
        d["dim"] = rep.dim;
        d["a_invariant"] = rep.a_invariant;
        d["gorenstein"] = rep.gorenstein;
        if (rep.closed_forms)
          d["closed_forms"] =
              py::dict(py::arg("reg") = rep.closed_forms->reg,
                       py::arg("a_invariant") = rep.closed_forms->a_invariant);
        return d;
      },
      py::arg("shape"), py::arg("r") = 1);

  m.def(
      "fiber_dimension",
      [](const py::object& shape, int r) { return fiber_dimension(as_shape(shape), r); },
      py::arg("shape"), py::arg("r") = 1);

  m.def(
      "minor",
      [](const py::object& shape, const ColumnTuple& cols) {
        return minor_det(as_shape(shape), cols).to_text();
      },
      py::arg("shape"), py::arg("cols"));

  m.def("diagonal_leading_check", [](const py::object& shape) {
    DiagonalCheck check = diagonal_leading_check(as_shape(shape));
    return py::make_tuple(check.ok,
                          check.counterexample ? py::cast(*check.counterexample)
                                               : py::object(py::none()));
  });

  m.def(
      "fiber_hilbert_direct",
      [](const py::object& shape, int r, int d) {
        return fiber_hilbert_direct(as_shape(shape), r, d);
      },
      py::arg("shape"), py::arg("r"), py::arg("d"));
}
