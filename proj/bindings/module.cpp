#include "pgkappa/engine.hpp"
#include "pgkappa/record.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace pgkappa;

namespace {

py::object to_py_int(const Int& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

py::object to_py_fraction(const Rat& q) {
    return py::module_::import("fractions").attr("Fraction")(q.str());
}

FactoredInteger as_factored(const py::object& n) {
    return FactoredInteger::parse(py::str(n).cast<std::string>());
}

py::dict factored_dict(const FactoredInteger& f) {
    py::dict d;
    d["value"] = to_py_int(f.value());
    d["literal"] = f.to_literal();
    py::list factors;
    for (const auto& pp : f.factors())
        factors.append(py::make_tuple(to_py_int(pp.prime), pp.exponent));
    d["factors"] = factors;
    return d;
}

py::dict bound_dict(const BoundValue& b) {
    py::dict d;
    d["descriptor"] = b.descriptor.str();
    d["value"] = to_py_int(b.value);
    d["phi"] = to_py_int(b.phi_n);
    d["cofactor"] = to_py_int(b.cofactor);
    d["inner"] = to_py_fraction(b.inner);
    return d;
}

py::dict kappa_dict(const KappaResult& res) {
    py::dict d;
    d["n"] = to_py_int(res.n.value());
    d["factorization"] = res.n.to_literal();
    d["kappa"] = to_py_int(res.kappa);
    d["rule"] = rule_name(res.rule);
    py::list mins;
    for (const auto& m : res.minimizers) mins.append(m.str());
    d["minimizers"] = mins;
    py::dict uniq;
    uniq["tag"] = res.uniqueness.tag_name();
    uniq["count"] = res.uniqueness.count;
    d["uniqueness"] = uniq;
    py::list cands;
    for (const auto& c : res.candidates) cands.append(bound_dict(c.bound));
    d["candidates"] = cands;
    return d;
}

}  // namespace

PYBIND11_MODULE(_pgkappa, m) {
    m.doc() = "exact vertex connectivity of power graphs of cyclic groups";

    m.def("parse", [](const py::object& n) { return factored_dict(as_factored(n)); },
          py::arg("n"), "Factor n (decimal int/str or factored literal like '2^3*3*5^2').");

    m.def("totient", [](const py::object& n) { return to_py_int(totient(as_factored(n))); },
          py::arg("n"));

    m.def("radical", [](const py::object& n) {
              auto f = as_factored(n);
              return py::make_tuple(to_py_int(radical(f)), to_py_int(radical_cofactor(f)));
          },
          py::arg("n"), "Returns (rad(n), n/rad(n)).");

    m.def("divisors", [](const py::object& n) {
              auto f = as_factored(n);
              py::list out;
              for (const auto& d : divisors(f)) out.append(to_py_int(divisor_value(f, d)));
              return out;
          },
          py::arg("n"));

    m.def("partial_totient_sum", [](const py::object& n, int a, int k, int s) {
              return to_py_int(partial_totient_sum(as_factored(n), a, k, s));
          },
          py::arg("n"), py::arg("a"), py::arg("k"), py::arg("s"));

    m.def("double_totient_sum", [](const py::object& n, int a, int b, int s, int t) {
              return to_py_int(double_totient_sum(as_factored(n), a, b, s, t));
          },
          py::arg("n"), py::arg("a"), py::arg("b"), py::arg("s"), py::arg("t"));

    m.def("beta", [](const py::object& n, int a, int s) { return bound_dict(beta(as_factored(n), a, s)); },
          py::arg("n"), py::arg("a"), py::arg("s"), "|Z_a^s| with its decomposition.");

    m.def("theta", [](const py::object& n, int a, int b, int s, int t) {
              return bound_dict(theta(as_factored(n), a, b, s, t));
          },
          py::arg("n"), py::arg("a"), py::arg("b"), py::arg("s"), py::arg("t"),
          "|X_{a,b}^{s,t}| with its decomposition.");

    m.def("alpha", [](const py::object& n, int a, int b) { return to_py_fraction(alpha(as_factored(n), a, b)); },
          py::arg("n"), py::arg("a"), py::arg("b"));

    m.def("two_phi_deficient", [](const py::object& n, const std::vector<int>& exclude) {
              return two_phi_deficient(as_factored(n), exclude);
          },
          py::arg("n"), py::arg("exclude") = std::vector<int>{});

    m.def("omega_set", [](const py::object& n) { return omega_set(as_factored(n)); }, py::arg("n"));

    m.def("squarefree_tiebreak", [](const py::object& n) { return squarefree_tiebreak(as_factored(n)); },
          py::arg("n"));

    m.def("kappa", [](const py::object& n) { return kappa_dict(kappa(as_factored(n))); },
          py::arg("n"), "Full decision procedure: value, rule, minimizers, candidate table.");

    m.def("cutset",
          [](const py::object& n, const std::string& descriptor, bool check, bool elements,
             long long expand_limit) {
              auto f = as_factored(n);
              auto desc = CutSetDescriptor::parse(descriptor);
              validate_descriptor(f, desc);
              DivisorSet dset = build_cutset(f, desc);
              py::dict d;
              d["descriptor"] = desc.str();
              d["size"] = to_py_int(dset.cardinality());
              py::list classes;
              for (const auto& v : dset.member_values()) classes.append(to_py_int(v));
              d["classes"] = classes;
              if (check) {
                  CutCheck cc = is_cutset(f, dset);
                  d["disconnects"] = cc.disconnects;
                  py::list comps;
                  for (const auto& comp : cc.components) {
                      py::list one;
                      for (const auto& v : comp) one.append(to_py_int(v));
                      comps.append(one);
                  }
                  d["components"] = comps;
              }
              if (elements) d["elements"] = expand(dset, expand_limit);
              return d;
          },
          py::arg("n"), py::arg("descriptor"), py::arg("check") = false,
          py::arg("elements") = false, py::arg("expand_limit") = 100000);

    m.def("oracle_kappa",
          [](const py::object& n, long long limit) {
              auto f = as_factored(n);
              ExplicitGraph g(f, limit);
              return oracle_vertex_connectivity(g, limit);
          },
          py::arg("n"), py::arg("limit") = 600,
          "Exact connectivity from the max-flow oracle on the explicit graph.");

    m.def("verify",
          [](const py::object& n, long long oracle_limit) {
              OracleReport rep = verify_against_oracle(as_factored(n), oracle_limit);
              py::dict d;
              d["n"] = to_py_int(rep.n);
              d["engine_kappa"] = to_py_int(rep.engine_kappa);
              d["oracle_kappa"] = rep.oracle_kappa;
              d["ok"] = rep.ok;
              return d;
          },
          py::arg("n"), py::arg("oracle_limit") = 600);

    m.def("min_cutsets",
          [](const py::object& n, int max_classes) {
              auto f = as_factored(n);
              auto enumeration = minimum_class_cutsets(f, max_classes);
              py::dict d;
              d["min_weight"] = to_py_int(enumeration.min_weight);
              py::list sets;
              for (const auto& cs : enumeration.cutsets) {
                  py::list one;
                  for (const auto& v : cs.member_values()) one.append(to_py_int(v));
                  sets.append(one);
              }
              d["cutsets"] = sets;
              return d;
          },
          py::arg("n"), py::arg("max_classes") = 16,
          "All minimum cut-sets as unions of order classes (brute force, tiny n).");
}
