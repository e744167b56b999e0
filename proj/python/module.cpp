#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zariski/apps.hpp"
#include "zariski/derivation.hpp"
#include "zariski/errors.hpp"
#include "zariski/oracles.hpp"
#include "zariski/prover.hpp"
#include "zariski/selftest.hpp"
#include "zariski/semantics.hpp"

namespace py = pybind11;
using namespace zariski;

namespace {

std::vector<std::string> strings(const std::vector<Elem>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

py::dict certificate_dict(const MembershipCertificate& c) {
  py::list cofactors;
  for (const auto& cf : c.cofactors) cofactors.append(py::make_tuple(cf.u.str(), cf.index));
  py::dict d;
  d["exponent"] = c.exponent;
  d["cofactors"] = cofactors;
  return d;
}

Env make_env(const Ring& ring, const std::map<std::string, std::string>& bindings) {
  Env env;
  for (const auto& [k, v] : bindings) env.emplace(k, ring.parse_elem(v));
  return env;
}

Context names(const Env& env) {
  Context ctx;
  for (const auto& [k, v] : env) ctx.push_back(k);
  return ctx;
}

}  // namespace

PYBIND11_MODULE(zariski, m) {
  m.doc() = "Radical ideals, forcing semantics and certificates over commutative rings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedRing>(m, "UnsupportedRing", PyExc_NotImplementedError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_RuntimeError);
  py::register_exception<SortError>(m, "SortError", PyExc_TypeError);
  py::register_exception<UnboundVariable>(m, "UnboundVariable", PyExc_NameError);

  m.def("describe_ring", [](const std::string& spec) { return make_ring(spec).describe(); });

  m.def("is_trivial", [](const std::string& spec) { return make_ring(spec).is_trivial(); });

  m.def(
      "entails",
      [](const std::string& ring_spec, const std::string& f, const std::vector<std::string>& gens) -> py::object {
        Ring ring = make_ring(ring_spec);
        Elem fe = ring.parse_elem(f);
        std::vector<Elem> gs;
        for (const auto& g : gens) gs.push_back(ring.parse_elem(g));
        Ideal ideal(ring, gs);
        auto c = radical_membership(ideal, fe);
        if (!c) return py::none();
        if (!verify_certificate(fe, ideal, *c)) throw CertificateError("certificate does not verify");
        return certificate_dict(*c);
      },
      py::arg("ring"), py::arg("f"), py::arg("gens"),
      "Certificate f^k = sum u_i g_i of D(f) <= join D(g_i), or None.");

  m.def(
      "truth_open",
      [](const std::string& ring_spec, const std::string& formula,
         const std::map<std::string, std::string>& env) -> py::object {
        Ring ring = make_ring(ring_spec);
        Env e = make_env(ring, env);
        TruthOpen t = truth_open(ring, parse_formula(formula, names(e)), e);
        if (!t.known()) return py::none();
        return py::cast(strings(t.value->support().generators()));
      },
      py::arg("ring"), py::arg("formula"), py::arg("env") = std::map<std::string, std::string>{},
      "Generators of the open [[formula]], or None when no rule applies.");

  m.def(
      "forces",
      [](const std::string& ring_spec, const std::string& at, const std::string& formula) {
        Ring ring = make_ring(ring_spec);
        return to_string(forces(ring, ring.parse_elem(at), parse_formula(formula)).decision);
      },
      py::arg("ring"), py::arg("at"), py::arg("formula"));

  m.def("nabla_translate", [](const std::string& f) { return format_formula(nabla_translate(parse_formula(f))); });

  m.def("classify", [](const std::string& f) { return to_string(classify(parse_formula(f))); });

  m.def(
      "check_derivation",
      [](const std::string& text, const std::string& ring_spec, bool prime_filters) {
        std::vector<Sequent> axioms;
        if (prime_filters) axioms = prime_filter_theory(make_ring(ring_spec));
        CheckResult r = check_derivation(axioms, derivation_from_json(text));
        return py::make_tuple(r.ok, r.describe());
      },
      py::arg("derivation"), py::arg("ring") = "Z", py::arg("prime_filters") = false);

  m.def(
      "prove",
      [](const std::string& sequent, const std::string& ring_spec) -> py::object {
        auto theory = prime_filter_theory(make_ring(ring_spec));
        auto d = coherent_prove(theory, parse_sequent(sequent));
        if (!d) return py::none();
        if (!check_derivation(theory, *d).ok) throw CertificateError("prover derivation rejected");
        return py::cast(derivation_to_json(*d));
      },
      py::arg("sequent"), py::arg("ring"), "A checked derivation from the prime-filter theory, as JSON, or None.");

  m.def("prime_filters", [](const std::string& ring_spec) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& p : enumerate_prime_filters(make_ring(ring_spec))) out.push_back(p.elements());
    return out;
  });

  m.def("mccoy", [](const std::string& ring_spec, const std::string& matrix) {
    Ring ring = make_ring(ring_spec);
    Matrix mat = parse_matrix(ring, matrix);
    McCoyResult r = mccoy_regularity(mat);
    if (!verify_mccoy(mat, r)) throw CertificateError("McCoy result does not verify");
    py::dict d;
    d["injective"] = r.regular();
    d["minors"] = strings(r.minors.generators());
    d["witness"] = r.witness ? py::cast(r.witness->str()) : py::none();
    return d;
  });

  m.def("richman", [](const std::string& ring_spec, const std::string& matrix) {
    Ring ring = make_ring(ring_spec);
    RichmanOutcome out = richman_harness(parse_matrix(ring, matrix));
    py::dict d;
    d["kernel"] = out.kernel ? py::cast(strings(*out.kernel)) : py::none();
    if (out.certificate && !verify_triviality(*out.certificate)) throw CertificateError("certificate does not verify");
    d["certificate"] = out.certificate ? py::cast(triviality_to_json(*out.certificate)) : py::none();
    return d;
  });

  m.def("generic_freeness", [](const std::string& ring_spec, const std::string& matrix) {
    Ring ring = make_ring(ring_spec);
    Matrix mat = parse_matrix(ring, matrix);
    GenericFreenessResult out = generic_freeness_simple(mat);
    py::dict d;
    if (out.free) {
      if (!verify_freeness(mat, *out.free)) throw CertificateError("freeness witness does not verify");
      d["f"] = out.free->f.str();
      d["localized"] = out.free->localized.describe();
      d["rank"] = out.free->rank;
    }
    if (out.trivial) d["trivial"] = triviality_to_json(*out.trivial);
    return d;
  });

  m.def(
      "run_criterion",
      [](int id, std::uint64_t seed) {
        CriterionResult r = run_criterion(id, seed);
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.passed;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        return d;
      },
      py::arg("id"), py::arg("seed") = 20211007);
}
