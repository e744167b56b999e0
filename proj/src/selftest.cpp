#include "zariski/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "zariski/apps.hpp"
#include "zariski/errors.hpp"
#include "zariski/frame.hpp"
#include "zariski/ideals.hpp"
#include "zariski/oracles.hpp"
#include "zariski/prover.hpp"
#include "zariski/semantics.hpp"

namespace zariski {

namespace {

using Clock = std::chrono::steady_clock;
using u64 = std::uint64_t;

Expr num(u64 k) { return make_num(Integer(static_cast<unsigned long>(k))); }

// Counts checks and keeps the first failure.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }

  std::string summary(const std::string& extra = "") const {
    std::ostringstream out;
    out << checks << " checks, " << failures << " failures";
    if (!extra.empty()) out << "; " << extra;
    if (failures) out << "; first: " << first;
    return out.str();
  }
};

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

u64 residue(const Elem& e) { return e.integer().get_ui(); }

// f^e = sum u_k g_{i_k} in Z/n, recomputed with native arithmetic.
bool native_check(u64 n, u64 f, const std::vector<u64>& gens, const MembershipCertificate& c) {
  u64 rhs = 0;
  for (const auto& cf : c.cofactors) {
    if (cf.index >= gens.size()) return false;
    rhs = (rhs + mulmod(residue(cf.u), gens[cf.index], n)) % n;
  }
  return powmod(f, c.exponent, n) == rhs;
}

Formula d_atom(u64 k) { return fm::pred(num(k)); }

}  // namespace

std::string criterion_title(int id) {
  static const char* titles[kCriterionCount] = {
      "radical membership, prime filters and the coherent prover agree on Z/n, n <= 60",
      "emitted certificates re-verify on randomized instances",
      "truth_open equals the brute-force forcing set",
      "not inv(x) => x = 0 is top on reduced Z/n and not on Z/4 at x = 2",
      "not not (x = y) => x = y is top on reduced Z/n, n <= 30",
      "nabla is a local operator on Rad(Z/n) and equals not not when reduced",
      "nabla translation: defining rows and agreement with nabla on geometric formulas",
      "derivation checker accepts the golden corpus and rejects every mutation",
      "McCoy, generic freeness and the injective-matrix trivializer",
      "1 forces false exactly on trivial presentations",
  };
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  return titles[id - 1];
}

// ---- formula generation ----

Formula random_formula(std::mt19937_64& rng, u64 n, int depth, FormulaShape shape) {
  auto pick = [&](u64 bound) { return std::uniform_int_distribution<u64>(0, bound - 1)(rng); };
  auto atom = [&]() -> Formula {
    if (shape == FormulaShape::kGeometric) {
      switch (pick(6)) {
        case 0:
        case 1:
        case 2:
          return d_atom(pick(n));
        case 3:
        case 4:
          return fm::eq(num(pick(n)), num(pick(n)));
        default:
          return pick(2) ? fm::top() : fm::bot();
      }
    }
    switch (pick(3)) {
      case 0:
        return d_atom(pick(n));
      case 1:
        return fm::eq(num(pick(n)), num(pick(n)));
      default:
        return fm::invertible(num(pick(n)));
    }
  };
  if (depth <= 0 || pick(4) == 0) return atom();
  auto sub = [&]() { return random_formula(rng, n, depth - 1, shape); };
  switch (shape) {
    case FormulaShape::kPropositional:
      switch (pick(4)) {
        case 0:
          return fm::conj(sub(), sub());
        case 1:
          return fm::disj(sub(), sub());
        case 2:
          return fm::imp(sub(), sub());
        default:
          return fm::neg(sub());
      }
    case FormulaShape::kGeometric:
      switch (pick(3)) {
        case 0:
          return fm::conj(sub(), sub());
        case 1:
          return fm::disj(sub(), sub());
        default: {
          std::vector<Formula> family;
          for (u64 i = 0, k = 1 + pick(3); i < k; ++i) family.push_back(sub());
          return fm::big_or(family);
        }
      }
    case FormulaShape::kCoherent:
      return pick(2) ? fm::conj(sub(), sub()) : fm::disj(sub(), sub());
  }
  return atom();
}

// ---- golden derivations ----

namespace {

Derivation node(const std::string& rule, const std::string& sequent, std::vector<Derivation> premises = {},
                RuleData data = {}) {
  return make_derivation(rule, parse_sequent(sequent), std::move(premises), std::move(data));
}

RuleData with_index(std::size_t i) {
  RuleData d;
  d.index = i;
  return d;
}

}  // namespace

std::vector<GoldenDerivation> golden_derivations() {
  std::vector<GoldenDerivation> out;
  {
    auto right = node("and-elim-right", "D(2) & D(3) |- D(3)");
    auto left = node("and-elim-left", "D(2) & D(3) |- D(2)");
    auto swap = node("and-intro", "D(2) & D(3) |- D(3) & D(2)", {right, left});
    auto id = node("identity", "D(2) & D(3) |- D(2) & D(3)");
    out.push_back({"conjunction", {}, node("cut", "D(2) & D(3) |- D(3) & D(2)", {id, swap})});
  }
  {
    auto top = node("top-intro", "D(2) |- true");
    auto id = node("identity", "D(2) |- D(2)");
    out.push_back({"truth", {}, node("and-intro", "D(2) |- D(2) & true", {id, top})});
  }
  {
    auto bot = node("bot-elim", "false |- D(2)");
    auto id = node("identity", "D(2) |- D(2)");
    out.push_back({"falsity", {}, node("or-elim", "false | D(2) |- D(2)", {bot, id})});
  }
  {
    auto a = node("or-intro-right", "D(2) |- D(3) | D(2)");
    auto b = node("or-intro-left", "D(3) |- D(3) | D(2)");
    out.push_back({"disjunction", {}, node("or-elim", "D(2) | D(3) |- D(3) | D(2)", {a, b})});
  }
  {
    auto a = node("bigor-intro", "D(2) |- Or{D(3); D(2)}", {}, with_index(1));
    auto b = node("bigor-intro", "D(3) |- Or{D(3); D(2)}", {}, with_index(0));
    out.push_back({"indexed disjunction", {}, node("bigor-elim", "Or{D(2); D(3)} |- Or{D(3); D(2)}", {a, b})});
  }
  {
    auto a = node("bigand-elim", "And{D(2); D(3)} |- D(3)", {}, with_index(1));
    auto b = node("bigand-elim", "And{D(2); D(3)} |- D(2)", {}, with_index(0));
    out.push_back({"indexed conjunction", {}, node("bigand-intro", "And{D(2); D(3)} |- And{D(3); D(2)}", {a, b})});
  }
  {
    auto right = node("and-elim-right", "D(2) & D(3) |- D(3)");
    auto intro = node("imp-intro", "D(2) |- D(3) => D(3)", {right});
    out.push_back({"implication", {}, node("imp-elim", "D(2) & D(3) |- D(3)", {intro})});
  }
  auto reflexive = [] {
    auto top = node("top-intro", "[x:A] D(1) |- true");
    auto refl = node("eq-refl", "[x:A] true |- x = x");
    return node("cut", "[x:A] D(1) |- x = x", {top, refl});
  };
  {
    auto intro = node("forall-intro", "D(1) |- forall x:A. x = x", {reflexive()});
    out.push_back({"universal", {}, node("forall-elim", "[x:A] D(1) |- x = x", {intro})});
  }
  {
    RuleData data;
    data.substitution["x"] = num(2);
    out.push_back({"substitution", {}, node("substitution", "D(1) |- 2 = 2", {reflexive()}, data)});
  }
  {
    auto id = node("identity", "exists y:A. y = 2 |- exists y:A. y = 2");
    auto inv = node("exists-elim-inv", "[y:A] y = 2 |- exists y:A. y = 2", {id});
    auto left = node("and-elim-left", "[y:A] y = 2 & D(3) |- y = 2");
    auto right = node("and-elim-right", "[y:A] y = 2 & D(3) |- D(3)");
    auto through = node("cut", "[y:A] y = 2 & D(3) |- exists y:A. y = 2", {left, inv});
    auto both = node("and-intro", "[y:A] y = 2 & D(3) |- D(3) & exists y:A. y = 2", {right, through});
    out.push_back(
        {"existential", {}, node("exists-elim", "exists y:A. (y = 2 & D(3)) |- D(3) & exists y:A. y = 2", {both})});
  }
  out.push_back({"frobenius exists", {},
                 node("frobenius-exists", "(exists y:A. y = 2) & D(3) |- exists y:A. (y = 2 & D(3))")});
  out.push_back({"frobenius or", {}, node("frobenius-or", "(D(2) | D(3)) & D(5) |- D(2) & D(5) | D(3) & D(5)")});
  {
    RuleData data;
    data.from = {"x"};
    data.to = {"y"};
    out.push_back({"equality substitution", {}, node("eq-subst", "[x:A, y:A] x = y & x * 2 = 0 |- y * 2 = 0", {}, data)});
  }
  {
    // 1 = 4 + 3 in Z/6 and 4 = 2 * 2.
    auto split = node("axiom", "D(1) |- D(4) | D(3)");
    auto factor = node("axiom", "D(4) |- D(2)");
    auto left = node("or-intro-left", "D(2) |- D(2) | D(3)");
    auto right = node("or-intro-right", "D(3) |- D(2) | D(3)");
    auto through = node("cut", "D(4) |- D(2) | D(3)", {factor, left});
    auto cases = node("or-elim", "D(4) | D(3) |- D(2) | D(3)", {through, right});
    out.push_back({"prime filter entailment in Z/6", prime_filter_theory(Ring::modular(6)),
                   node("cut", "D(1) |- D(2) | D(3)", {split, cases})});
  }
  return out;
}

namespace {

void collect_nodes(const Derivation& d, std::vector<Derivation>& out, std::unordered_map<const DerivationNode*, bool>& seen) {
  if (seen[d.get()]) return;
  seen[d.get()] = true;
  out.push_back(d);
  for (const auto& p : d->premises) collect_nodes(p, out, seen);
}

Derivation replace_node(const Derivation& d, const DerivationNode* target, const Derivation& with,
                        std::unordered_map<const DerivationNode*, Derivation>& memo) {
  if (d.get() == target) return with;
  auto it = memo.find(d.get());
  if (it != memo.end()) return it->second;
  std::vector<Derivation> premises;
  bool changed = false;
  for (const auto& p : d->premises) {
    premises.push_back(replace_node(p, target, with, memo));
    changed = changed || premises.back() != p;
  }
  Derivation r = changed ? make_derivation(d->rule, d->conclusion, premises, d->data) : d;
  memo.emplace(d.get(), r);
  return r;
}

}  // namespace

std::vector<Derivation> single_node_mutations(const Derivation& d) {
  std::vector<Derivation> nodes;
  std::unordered_map<const DerivationNode*, bool> seen;
  collect_nodes(d, nodes, seen);
  std::vector<Derivation> out;
  for (const auto& n : nodes) {
    std::vector<Derivation> variants;
    for (const auto& r : rule_names()) {
      if (r != n->rule) variants.push_back(make_derivation(r, n->conclusion, n->premises, n->data));
    }
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      auto premises = n->premises;
      premises.erase(premises.begin() + static_cast<std::ptrdiff_t>(i));
      variants.push_back(make_derivation(n->rule, n->conclusion, premises, n->data));
    }
    const Sequent& c = n->conclusion;
    variants.push_back(make_derivation(n->rule, Sequent{c.context, fm::conj(c.lhs, fm::top()), c.rhs}, n->premises, n->data));
    variants.push_back(make_derivation(n->rule, Sequent{c.context, c.lhs, fm::conj(c.rhs, fm::top())}, n->premises, n->data));
    for (const auto& v : variants) {
      std::unordered_map<const DerivationNode*, Derivation> memo;
      out.push_back(replace_node(d, n.get(), v, memo));
    }
  }
  return out;
}

// ---- criteria ----

namespace {

Sequent goal_sequent(const Formula& lhs, const std::vector<u64>& gs) {
  Formula rhs = fm::bot();
  if (gs.size() == 1) rhs = d_atom(gs[0]);
  if (gs.size() == 2) rhs = fm::disj(d_atom(gs[0]), d_atom(gs[1]));
  return Sequent{{}, lhs, rhs};
}

CriterionResult criterion1(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::size_t derivations = 0;
  for (u64 n = 2; n <= 60; ++n) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    auto theory = prime_filter_theory(ring);
    CoherentProver prover(theory);
    auto filters = enumerate_prime_filters(ring);
    std::vector<Elem> elems = ring.elements();
    auto check_goal = [&](u64 f, const std::vector<u64>& gs) {
      std::vector<Elem> gens;
      for (u64 g : gs) gens.push_back(elems[g]);
      Ideal ideal(ring, gens);
      auto cert = radical_membership(ideal, elems[f]);
      bool algebraic = cert.has_value();
      if (cert) {
        t.expect(verify_certificate(elems[f], ideal, *cert), [&] { return "certificate fails in Z/" + std::to_string(n); });
      }
      bool semantic = true;
      for (const auto& p : filters) {
        if (!p.members[f]) continue;
        bool hit = false;
        for (u64 g : gs) hit = hit || p.members[g];
        if (!hit) {
          semantic = false;
          break;
        }
      }
      Sequent goal = goal_sequent(d_atom(f), gs);
      bool proved = prover.entails(goal);
      t.expect(algebraic == semantic && semantic == proved, [&] {
        std::ostringstream o;
        o << "Z/" << n << ": " << format_sequent(goal) << " radical=" << algebraic << " filters=" << semantic
          << " prover=" << proved;
        return o.str();
      });
      bool build = proved && (n <= 10 || std::uniform_int_distribution<int>(0, 4999)(rng) == 0);
      if (build) {
        ++derivations;
        auto d = prover.prove(goal);
        t.expect(d && sequent_equal((*d)->conclusion, goal) && check_derivation(theory, *d).ok,
                 [&] { return "prover derivation rejected for " + format_sequent(goal); });
      }
    };
    for (u64 f = 0; f < n; ++f) {
      check_goal(f, {});
      for (u64 g = 0; g < n; ++g) check_goal(f, {g});
      for (u64 g1 = 0; g1 < n; ++g1) {
        for (u64 g2 = g1 + 1; g2 < n; ++g2) check_goal(f, {g1, g2});
      }
    }
  }
  return {1, "", t.failures == 0, t.summary(std::to_string(derivations) + " derivations checked")};
}

std::string random_poly_text(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> terms(1, 3);
  std::string out;
  for (int k = terms(rng); k > 0; --k) {
    int c = coeff(rng);
    if (!out.empty()) out += " + ";
    out += "(" + std::to_string(c) + ")";
    for (const auto& v : vars) {
      int e = exp(rng);
      if (e) out += "*" + v + "^" + std::to_string(e);
    }
  }
  return out;
}

CriterionResult criterion2(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  auto pick = [&](u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); };
  std::size_t emitted = 0;
  auto membership_case = [&](const Ring& ring, const std::vector<Elem>& gens, const Elem& f) {
    Ideal ideal(ring, gens);
    for (bool radical : {false, true}) {
      auto c = radical ? radical_membership(ideal, f) : ideal_membership(ideal, f);
      if (!c) continue;
      ++emitted;
      t.expect(verify_certificate(f, ideal, *c), [&] { return "certificate for " + f.str() + " in " + ideal.str(); });
      auto back = certificate_from_json(ring, certificate_to_json(*c));
      t.expect(verify_certificate(f, ideal, back), [&] { return "round-tripped certificate for " + f.str(); });
      if (ring.is_modular()) {
        u64 n = ring.small_modulus();
        std::vector<u64> gs;
        for (const auto& g : gens) gs.push_back(residue(g));
        t.expect(native_check(n, residue(f), gs, *c), [&] { return "native recheck in " + ring.describe(); });
      } else if (ring.is_integers()) {
        Integer rhs = 0;
        for (const auto& cf : c->cofactors) rhs += cf.u.integer() * gens[cf.index].integer();
        Integer lhs;
        mpz_pow_ui(lhs.get_mpz_t(), f.integer().get_mpz_t(), c->exponent);
        t.expect(lhs == rhs, [&] { return "integer recheck for " + f.str(); });
      }
    }
  };
  // Z/n
  for (int i = 0; i < 4000; ++i) {
    u64 n = pick(1, 200);
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    std::vector<Elem> gens;
    for (u64 k = pick(0, 3); k > 0; --k) gens.push_back(ring.from_integer(Integer(static_cast<unsigned long>(pick(0, n - 1)))));
    membership_case(ring, gens, ring.from_integer(Integer(static_cast<unsigned long>(pick(0, n - 1)))));
  }
  // Z
  Ring z = Ring::integers();
  for (int i = 0; i < 1500; ++i) {
    std::vector<Elem> gens;
    for (u64 k = pick(0, 3); k > 0; --k) gens.push_back(z.from_integer(Integer(static_cast<long>(pick(0, 60)) - 30)));
    membership_case(z, gens, z.from_integer(Integer(static_cast<long>(pick(0, 60)) - 30)));
  }
  // small polynomial rings
  std::vector<Ring> polys = {make_ring("Q[x,y]/(x^2 - y)"), make_ring("F5[x,y]"), make_ring("Q[x]"),
                             make_ring("F3[x]/(x^3 - x)")};
  for (int i = 0; i < 400; ++i) {
    const Ring& ring = polys[i % polys.size()];
    std::vector<Elem> gens;
    for (u64 k = pick(1, 2); k > 0; --k) gens.push_back(ring.parse_elem(random_poly_text(rng, ring.variables())));
    Elem f = ring.parse_elem(random_poly_text(rng, ring.variables()));
    if (pick(0, 1)) f = f * gens[0];
    membership_case(ring, gens, f);
  }
  // leq certificates
  for (int i = 0; i < 2000; ++i) {
    u64 n = pick(1, 120);
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    auto random_open = [&] {
      std::vector<Elem> gens;
      for (u64 k = pick(0, 2); k > 0; --k) gens.push_back(ring.from_integer(Integer(static_cast<unsigned long>(pick(0, n - 1)))));
      return Open(Ideal(ring, gens));
    };
    Open u = random_open();
    Open v = random_open();
    auto certs = leq(u, v);
    std::vector<u64> vg;
    for (const auto& g : v.support().generators()) vg.push_back(residue(g));
    bool oracle = true;
    for (const auto& g : u.support().generators()) oracle = oracle && in_radical_u64(n, vg, residue(g));
    t.expect(certs.has_value() == oracle, [&] { return "leq decision for " + u.str() + " <= " + v.str(); });
    if (!certs) continue;
    for (std::size_t k = 0; k < certs->size(); ++k) {
      ++emitted;
      const Elem& g = u.support().generators()[k];
      t.expect(verify_certificate(g, v.support(), (*certs)[k]) && native_check(n, residue(g), vg, (*certs)[k]),
               [&] { return "leq certificate for " + u.str() + " <= " + v.str(); });
    }
  }
  // forcing partitions
  for (int i = 0; i < 2000; ++i) {
    u64 n = pick(2, 60);
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    Formula phi = random_formula(rng, n, static_cast<int>(pick(0, 3)), FormulaShape::kCoherent);
    Elem f = ring.from_integer(Integer(static_cast<unsigned long>(pick(0, n - 1))));
    auto cert = forcing_certificate(ring, f, phi);
    bool forced = forces(ring, f, phi).decision == Decision::kTrue;
    t.expect(cert.has_value() == forced, [&] { return "forcing certificate presence for " + format_formula(phi); });
    if (!cert) continue;
    ++emitted;
    t.expect(check_forcing_certificate(ring, f, phi, {}, *cert), [&] { return "forcing certificate for " + format_formula(phi); });
    auto back = forcing_certificate_from_json(ring, forcing_certificate_to_json(*cert));
    t.expect(check_forcing_certificate(ring, f, phi, {}, back), [&] { return "round-tripped forcing certificate"; });
  }
  // 1 = 0
  std::vector<TrivialityCertificate> trivial;
  Ring one = Ring::modular(Integer(1));
  for (std::size_t cols = 2; cols <= 4; ++cols) {
    auto out = richman_harness(Matrix(one, 1, cols));
    if (out.certificate) trivial.push_back(*out.certificate);
    else t.expect(false, [] { return "Z/1 trivializer did not run"; });
  }
  for (const auto& m : {Matrix(one, 1, 1), Matrix(one, 2, 1), Matrix(one, 1, 0)}) {
    auto out = generic_freeness_simple(m);
    if (out.trivial) trivial.push_back(*out.trivial);
    else t.expect(false, [] { return "Z/1 generic freeness gave no certificate"; });
  }
  trivial.push_back(trivial_ring_certificate(make_ring("Q[x]/(1)")));
  trivial.push_back(trivial_ring_certificate(make_ring("Q[x,y]/(x, x - 1)")));
  for (const auto& c : trivial) {
    ++emitted;
    t.expect(verify_triviality(c), [] { return "triviality certificate"; });
    t.expect(verify_triviality(triviality_from_json(triviality_to_json(c))), [] { return "round-tripped triviality"; });
  }
  return {2, "", t.failures == 0 && t.checks >= 10000, t.summary(std::to_string(emitted) + " certificates emitted")};
}

CriterionResult criterion3(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::size_t formulas = 0;
  for (u64 n : {4, 6, 8, 12, 30}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    for (int i = 0; i < 110; ++i) {
      int depth = 1 + static_cast<int>(rng() % 3);
      Formula phi = random_formula(rng, n, depth, FormulaShape::kPropositional);
      ++formulas;
      TruthOpen open = truth_open(ring, phi);
      if (!open.known()) {
        t.expect(false, [&] { return "unknown truth open for " + format_formula(phi) + ": " + open.unknown_reason; });
        continue;
      }
      auto forced = brute_forcing_set(ring, phi);
      t.expect(open_matches_set(*open.value, forced), [&] {
        return "Z/" + std::to_string(n) + ": " + format_formula(phi) + " compiled to " + open.value->str();
      });
    }
  }
  return {3, "", t.failures == 0 && formulas >= 500, t.summary(std::to_string(formulas) + " formulas")};
}

CriterionResult criterion4(std::uint64_t) {
  Tally t;
  for (u64 n = 1; n <= 60; ++n) {
    if (!is_squarefree(Integer(static_cast<unsigned long>(n)))) continue;
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    for (u64 x = 0; x < n; ++x) {
      Formula phi = fm::imp(fm::neg(fm::invertible(num(x))), fm::eq(num(x), num(0)));
      TruthOpen open = truth_open(ring, phi);
      t.expect(open.known() && open_equal(*open.value, Open::top(ring)),
               [&] { return "Z/" + std::to_string(n) + ", x = " + std::to_string(x); });
    }
  }
  Ring z4 = Ring::modular(Integer(4));
  Formula phi = fm::imp(fm::neg(fm::invertible(num(2))), fm::eq(num(2), num(0)));
  TruthOpen open = truth_open(z4, phi);
  Open expected = basic_open(z4.from_integer(Integer(2)));
  t.expect(open.known() && !open_equal(*open.value, Open::top(z4)) && open_equal(*open.value, expected),
           [&] { return "Z/4, x = 2 gave " + (open.known() ? open.value->str() : std::string("unknown")); });
  return {4, "", t.failures == 0, t.summary()};
}

CriterionResult criterion5(std::uint64_t) {
  Tally t;
  for (u64 n = 1; n <= 30; ++n) {
    if (!is_squarefree(Integer(static_cast<unsigned long>(n)))) continue;
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    for (u64 x = 0; x < n; ++x) {
      for (u64 y = 0; y < n; ++y) {
        Formula e = fm::eq(num(x), num(y));
        TruthOpen open = truth_open(ring, fm::imp(fm::neg(fm::neg(e)), e));
        t.expect(open.known() && open_equal(*open.value, Open::top(ring)), [&] {
          return "Z/" + std::to_string(n) + ", " + std::to_string(x) + " = " + std::to_string(y);
        });
      }
    }
  }
  return {5, "", t.failures == 0, t.summary()};
}

CriterionResult criterion6(std::uint64_t) {
  Tally t;
  for (u64 n : {4, 6, 12, 30}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    auto opens = all_opens(ring);
    bool reduced = is_squarefree(Integer(static_cast<unsigned long>(n)));
    std::vector<Open> nab;
    for (const auto& u : opens) nab.push_back(nabla_open(ring, u));
    auto where = [&](const Open& u) { return "Z/" + std::to_string(n) + ", U = " + u.str(); };
    for (std::size_t i = 0; i < opens.size(); ++i) {
      const Open& u = opens[i];
      t.expect(leq(u, nab[i]).has_value(), [&] { return "U <= nabla U fails at " + where(u); });
      t.expect(open_equal(nabla_open(ring, nab[i]), nab[i]), [&] { return "nabla nabla U != nabla U at " + where(u); });
      if (reduced) {
        t.expect(open_equal(nab[i], negation(negation(u))), [&] { return "nabla != not not at " + where(u); });
      }
      for (std::size_t j = 0; j < opens.size(); ++j) {
        t.expect(open_equal(nabla_open(ring, meet(u, opens[j])), meet(nab[i], nab[j])),
                 [&] { return "nabla does not preserve the meet with " + opens[j].str() + " at " + where(u); });
      }
    }
  }
  return {6, "", t.failures == 0, t.summary()};
}

CriterionResult criterion7(std::uint64_t seed) {
  Tally t;
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"2 = 3", "nabla(2 = 3)"},
      {"D(2)", "nabla(D(2))"},
      {"beta", "nabla(beta)"},
      {"true", "true"},
      {"false", "nabla(false)"},
      {"D(2) & D(3)", "nabla(D(2)) & nabla(D(3))"},
      {"And{D(2); D(3); D(5)}", "And{nabla(D(2)); nabla(D(3)); nabla(D(5))}"},
      {"D(2) | D(3)", "nabla(nabla(D(2)) | nabla(D(3)))"},
      {"Or{D(2); D(3); D(5)}", "nabla(Or{nabla(D(2)); nabla(D(3)); nabla(D(5))})"},
      {"D(2) => D(3)", "nabla(D(2)) => nabla(D(3))"},
      {"forall x:A. x = 0", "forall x:A. nabla(x = 0)"},
      {"exists x:A. x = 0", "nabla(exists x:A. nabla(x = 0))"},
  };
  for (const auto& [in, expected] : rows) {
    Formula got = nabla_translate(parse_formula(in));
    t.expect(formula_equal(got, parse_formula(expected)), [&] { return in + " translated to " + format_formula(got); });
  }
  std::mt19937_64 rng(seed);
  std::size_t formulas = 0;
  for (u64 n : {4, 6, 12, 30}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    auto opens = all_opens(ring);
    for (int i = 0; i < 30; ++i) {
      Formula phi = random_formula(rng, n, 1 + static_cast<int>(rng() % 3), FormulaShape::kGeometric);
      ++formulas;
      t.expect(classify(phi) != Fragment::kFirstOrder, [&] { return format_formula(phi) + " is not geometric"; });
      Formula translated = nabla_translate(phi);
      Formula wrapped = fm::nabla(phi);
      for (const auto& b : opens) {
        TruthOpen x = truth_open(ring, translated, {}, b);
        TruthOpen y = truth_open(ring, wrapped, {}, b);
        t.expect(x.known() && y.known() && open_equal(*x.value, *y.value), [&] {
          return "Z/" + std::to_string(n) + ", beta = " + b.str() + ": " + format_formula(phi);
        });
      }
    }
  }
  return {7, "", t.failures == 0 && formulas >= 100, t.summary(std::to_string(formulas) + " geometric formulas")};
}

CriterionResult criterion8(std::uint64_t) {
  Tally t;
  std::set<std::string> used;
  std::size_t mutants = 0;
  for (const auto& g : golden_derivations()) {
    CheckResult r = check_derivation(g.axioms, g.derivation);
    t.expect(r.ok, [&] { return g.name + " rejected: " + r.describe(); });
    t.expect(derivation_from_json(derivation_to_json(g.derivation)) != nullptr &&
                 check_derivation(g.axioms, derivation_from_json(derivation_to_json(g.derivation))).ok,
             [&] { return g.name + " does not survive a JSON round trip"; });
    std::vector<Derivation> stack{g.derivation};
    while (!stack.empty()) {
      auto d = stack.back();
      stack.pop_back();
      used.insert(d->rule);
      for (const auto& p : d->premises) stack.push_back(p);
    }
    for (const auto& m : single_node_mutations(g.derivation)) {
      ++mutants;
      t.expect(!check_derivation(g.axioms, m).ok, [&] { return g.name + ": a mutant was accepted:\n" + derivation_to_json(m); });
    }
  }
  for (const auto& r : rule_names()) {
    t.expect(used.count(r) > 0, [&] { return "no golden instance of " + r; });
  }
  // The prover's reconstruction of the same entailment.
  Ring z6 = Ring::modular(Integer(6));
  auto theory = prime_filter_theory(z6);
  auto d = coherent_prove(theory, parse_sequent("D(1) |- D(2) | D(3)"));
  t.expect(d && check_derivation(theory, *d).ok, [] { return "prover derivation of D(1) |- D(2) | D(3) rejected"; });
  return {8, "", t.failures == 0, t.summary(std::to_string(mutants) + " mutants rejected")};
}

// Minors of size cols, by the definition, for matrices of at most 2 rows.
std::vector<u64> brute_minors(u64 n, std::size_t r, std::size_t c, const std::vector<u64>& a) {
  std::vector<u64> out;
  if (c > r) return out;
  if (c == 0) return {1 % n};
  if (c == 1) return a;
  // c == 2, r == 2
  return {(mulmod(a[0], a[3], n) + n - mulmod(a[1], a[2], n)) % n};
}

bool brute_injective(u64 n, std::size_t r, std::size_t c, const std::vector<u64>& a) {
  std::vector<u64> v(c, 0);
  while (true) {
    std::size_t j = 0;
    while (j < c && ++v[j] == n) v[j++] = 0;
    if (j == c) return true;
    bool zero = true;
    for (std::size_t i = 0; i < r && zero; ++i) {
      u64 s = 0;
      for (std::size_t k = 0; k < c; ++k) s = (s + mulmod(a[i * c + k], v[k], n)) % n;
      zero = s == 0;
    }
    if (zero) return false;
  }
}

CriterionResult criterion9(std::uint64_t) {
  Tally t;
  std::size_t mccoy = 0;
  for (u64 n : {4, 6, 12}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    std::vector<Elem> elems = ring.elements();
    for (std::size_t r = 1; r <= 2; ++r) {
      for (std::size_t c = 1; c <= 3; ++c) {
        std::size_t cells = r * c;
        std::vector<u64> a(cells, 0);
        while (true) {
          std::vector<Elem> entries;
          for (u64 x : a) entries.push_back(elems[x]);
          Matrix m(ring, r, c, std::move(entries));
          McCoyResult res = mccoy_regularity(m);
          ++mccoy;
          auto lam = brute_minors(n, r, c, a);
          bool regular = true;
          for (u64 x = 1; x < n && regular; ++x) {
            bool kills = true;
            for (u64 g : lam) kills = kills && mulmod(x, g, n) == 0;
            regular = !kills;
          }
          bool injective = brute_injective(n, r, c, a);
          t.expect(res.regular() == regular && regular == injective && verify_mccoy(m, res), [&] {
            return "Z/" + std::to_string(n) + " " + m.str() + ": mccoy=" + std::to_string(res.regular()) +
                   " annihilator=" + std::to_string(regular) + " injective=" + std::to_string(injective);
          });
          std::size_t k = 0;
          while (k < cells && ++a[k] == n) a[k++] = 0;
          if (k == cells) break;
        }
      }
    }
  }
  std::size_t presentations = 0;
  for (u64 n : {6, 30}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    std::vector<Elem> elems = ring.elements();
    std::vector<std::pair<std::size_t, std::size_t>> shapes = {{1, 0}, {2, 0}, {1, 1}, {1, 2}, {2, 1}};
    if (n == 6) shapes.push_back({2, 2});
    for (auto [r, c] : shapes) {
      std::size_t cells = r * c;
      std::vector<u64> a(cells, 0);
      while (true) {
        std::vector<Elem> entries;
        for (u64 x : a) entries.push_back(elems[x]);
        Matrix m(ring, r, c, std::move(entries));
        ++presentations;
        try {
          auto out = generic_freeness_simple(m);
          bool ok = out.free && verify_freeness(m, *out.free) && !is_nilpotent(out.free->f).has_value();
          t.expect(ok, [&] { return "generic freeness over Z/" + std::to_string(n) + " for " + m.str(); });
        } catch (const std::exception& e) {
          t.expect(false, [&] { return "generic freeness threw for " + m.str() + ": " + e.what(); });
        }
        std::size_t k = 0;
        while (k < cells && ++a[k] == n) a[k++] = 0;
        if (k == cells) break;
      }
    }
  }
  Ring one = Ring::modular(Integer(1));
  for (const auto& m : {Matrix(one, 1, 1), Matrix(one, 1, 0)}) {
    auto out = generic_freeness_simple(m);
    t.expect(out.trivial && verify_triviality(*out.trivial), [] { return "Z/1 generic freeness"; });
  }
  auto trivial = richman_harness(Matrix(one, 1, 2));
  t.expect(!trivial.kernel && trivial.certificate && verify_triviality(*trivial.certificate),
           [] { return "Z/1 trivializer certificate"; });
  std::size_t wide = 0;
  for (u64 n : {2, 3, 6, 30}) {
    Ring ring = Ring::modular(Integer(static_cast<unsigned long>(n)));
    std::vector<Elem> elems = ring.elements();
    std::vector<std::pair<std::size_t, std::size_t>> shapes = {{1, 2}};
    if (n <= 6) {
      shapes.push_back({1, 3});
      shapes.push_back({2, 3});
    }
    for (auto [r, c] : shapes) {
      std::size_t cells = r * c;
      std::vector<u64> a(cells, 0);
      while (true) {
        std::vector<Elem> entries;
        for (u64 x : a) entries.push_back(elems[x]);
        Matrix m(ring, r, c, std::move(entries));
        ++wide;
        auto out = richman_harness(m);
        bool ok = out.kernel && !out.certificate;
        if (ok) {
          bool nonzero = false;
          for (const auto& x : *out.kernel) nonzero = nonzero || !x.is_zero();
          for (const auto& x : mat_vec(m, *out.kernel)) ok = ok && x.is_zero();
          ok = ok && nonzero;
        }
        t.expect(ok, [&] { return "kernel path did not fire over Z/" + std::to_string(n) + " for " + m.str(); });
        std::size_t k = 0;
        while (k < cells && ++a[k] == n) a[k++] = 0;
        if (k == cells) break;
      }
    }
  }
  std::ostringstream extra;
  extra << mccoy << " McCoy matrices, " << presentations << " presentations, " << wide << " wide matrices";
  return {9, "", t.failures == 0, t.summary(extra.str())};
}

CriterionResult criterion10(std::uint64_t) {
  Tally t;
  const std::vector<std::pair<std::string, bool>> corpus = {
      {"Z/1", true},           {"Q[x]/(1)", true},           {"Q[x,y]/(x, x - 1)", true},
      {"Z/6", false},          {"Z", false},                 {"Q[x,y]/(x^2 - y)", false},
      {"Z/2", false},          {"Q[x]/(x^2)", false},        {"F5[x]/(x^5 - x)", false},
      {"Z/30", false},
  };
  for (const auto& [spec, trivial] : corpus) {
    Ring ring = make_ring(spec);
    ForcingDecision d = forces(ring, ring.one(), fm::bot());
    bool forced = d.decision == Decision::kTrue;
    t.expect(forced == trivial, [&] { return spec + ": forces(1, false) = " + to_string(d.decision); });
    if (forced) {
      t.expect(d.nilpotency.has_value() && pow(ring.one(), *d.nilpotency).is_zero(),
               [&] { return spec + ": missing nilpotency witness"; });
    }
  }
  return {10, "", t.failures == 0, t.summary()};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  static const std::function<CriterionResult(std::uint64_t)> table[kCriterionCount] = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::string title = criterion_title(id);
  auto start = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](seed);
  } catch (const std::exception& e) {
    r = {id, "", false, std::string("exception: ") + e.what()};
  }
  r.id = id;
  r.title = title;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace zariski
