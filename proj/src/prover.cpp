#include "zariski/prover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace zariski {

namespace {

using Kind = FormulaNode::Kind;
using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, int i) {
  std::size_t w = static_cast<std::size_t>(i) / 64;
  return w < b.size() && ((b[w] >> (i % 64)) & 1u);
}

void set_bit(Bits& b, int i) {
  std::size_t w = static_cast<std::size_t>(i) / 64;
  if (w >= b.size()) b.resize(w + 1, 0);
  b[w] |= std::uint64_t(1) << (i % 64);
}

void trim(Bits& b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = b.size();
    for (auto w : b) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h << 6) + (h >> 2));
    return h;
  }
};

bool is_atom(const Formula& f) {
  return f->kind == Kind::kPred || f->kind == Kind::kEq || f->kind == Kind::kBeta;
}

Sequent seq(Formula lhs, Formula rhs) { return Sequent{{}, std::move(lhs), std::move(rhs)}; }

Derivation node(const char* rule, Formula lhs, Formula rhs, std::vector<Derivation> premises = {},
                RuleData data = {}) {
  return make_derivation(rule, seq(std::move(lhs), std::move(rhs)), std::move(premises), std::move(data));
}

Derivation identity(const Formula& f) { return node("identity", f, f); }

Derivation cut(const Derivation& a, const Derivation& b) {
  return node("cut", a->conclusion.lhs, b->conclusion.rhs, {a, b});
}

Derivation and_intro(const Derivation& a, const Derivation& b) {
  return node("and-intro", a->conclusion.lhs, fm::conj(a->conclusion.rhs, b->conclusion.rhs), {a, b});
}

Derivation top_intro(const Formula& f) { return node("top-intro", f, fm::top()); }

Derivation bot_elim(const Formula& f) { return node("bot-elim", fm::bot(), f); }

}  // namespace

struct CoherentProver::Impl {
  struct Leaf {
    bool bottom = false;
    std::vector<int> atoms;
  };

  struct Axiom {
    std::vector<int> lhs;
    std::vector<Leaf> leaves;
    bool horn = false;          // exactly one leaf, not false
    bool contradiction = false;  // no leaf can hold
  };

  struct State {
    Bits entry;
    Bits sat;
    std::vector<int> firings;
    int closing_axiom = -1;
    int branch_axiom = -1;
    std::vector<int> children;  // per leaf of the split axiom; -1 for false leaves
  };

  struct Chain {
    Derivation derivation;  // canon(entry) |- phi_sat; null when nothing fired
    Formula phi_sat;
  };

  // Quantifier-free goal succedent over atom ids.
  struct Goal {
    Kind kind;
    int atom = -1;
    std::vector<Goal> children;
  };

  std::vector<Sequent> theory;
  std::vector<Axiom> axioms;
  std::vector<int> horn_like;  // horn and contradiction axioms
  std::vector<int> branching;
  std::vector<std::vector<int>> watchers;  // atom -> horn_like axioms with the atom on the left
  std::vector<Formula> atom_formulas;
  std::unordered_map<std::string, int> atom_ids;
  std::vector<State> states;
  std::unordered_map<Bits, int, BitsHash> state_ids;
  std::vector<std::optional<Chain>> chains;
  std::vector<Formula> canon_cache;

  // Derivation-building caches keyed by formula nodes; the formulas are kept alive in keep_alive.
  std::unordered_map<const FormulaNode*, Bits> atoms_of_cache;
  std::map<std::pair<const FormulaNode*, int>, Derivation> projections;
  std::vector<Formula> keep_alive;

  int atom_id(const Formula& f) {
    std::string key = format_formula(f);
    auto it = atom_ids.find(key);
    if (it != atom_ids.end()) return it->second;
    int id = static_cast<int>(atom_formulas.size());
    atom_ids.emplace(key, id);
    atom_formulas.push_back(f);
    watchers.emplace_back();
    return id;
  }

  // Conjunction of atoms and true; false when the shape does not fit.
  bool collect_conjunction(const Formula& f, std::vector<int>& out) {
    if (f->kind == Kind::kTop) return true;
    if (is_atom(f)) {
      if (!free_names(f).empty()) return false;
      out.push_back(atom_id(f));
      return true;
    }
    if (f->kind == Kind::kAnd && !f->indexed) {
      return collect_conjunction(f->children[0], out) && collect_conjunction(f->children[1], out);
    }
    return false;
  }

  bool collect_leaves(const Formula& f, std::vector<Leaf>& out) {
    if (f->kind == Kind::kOr) {
      for (const auto& c : f->children) {
        if (!collect_leaves(c, out)) return false;
      }
      return true;
    }
    if (f->kind == Kind::kBot) {
      out.push_back(Leaf{true, {}});
      return true;
    }
    Leaf leaf;
    if (!collect_conjunction(f, leaf.atoms)) return false;
    out.push_back(std::move(leaf));
    return true;
  }

  explicit Impl(std::vector<Sequent> t) : theory(std::move(t)) {
    for (std::size_t j = 0; j < theory.size(); ++j) {
      const Sequent& s = theory[j];
      Axiom ax;
      if (!s.context.empty() || !collect_conjunction(s.lhs, ax.lhs) || !collect_leaves(s.rhs, ax.leaves)) {
        throw std::invalid_argument("axiom " + std::to_string(j) + " is not propositional coherent: " +
                                    format_sequent(s));
      }
      std::sort(ax.lhs.begin(), ax.lhs.end());
      ax.lhs.erase(std::unique(ax.lhs.begin(), ax.lhs.end()), ax.lhs.end());
      bool any_live = false;
      for (const auto& l : ax.leaves) any_live = any_live || !l.bottom;
      ax.contradiction = !any_live;
      ax.horn = ax.leaves.size() == 1 && !ax.leaves[0].bottom;
      axioms.push_back(std::move(ax));
    }
    for (std::size_t j = 0; j < axioms.size(); ++j) {
      const Axiom& ax = axioms[j];
      if (ax.horn || ax.contradiction) {
        horn_like.push_back(static_cast<int>(j));
        for (int a : ax.lhs) watchers[a].push_back(static_cast<int>(j));
      } else {
        branching.push_back(static_cast<int>(j));
      }
    }
  }

  bool subset(const std::vector<int>& atoms, const Bits& s) const {
    for (int a : atoms) {
      if (!test_bit(s, a)) return false;
    }
    return true;
  }

  int state_for(Bits entry) {
    trim(entry);
    auto it = state_ids.find(entry);
    if (it != state_ids.end()) return it->second;
    State st = saturate(entry);
    int id = static_cast<int>(states.size());
    state_ids.emplace(entry, id);
    states.push_back(std::move(st));
    chains.emplace_back();
    canon_cache.emplace_back();
    if (states[id].branch_axiom >= 0) {
      const Axiom& ax = axioms[states[id].branch_axiom];
      std::vector<int> children;
      for (const auto& leaf : ax.leaves) {
        if (leaf.bottom) {
          children.push_back(-1);
          continue;
        }
        Bits next = states[id].sat;
        for (int a : leaf.atoms) set_bit(next, a);
        children.push_back(state_for(std::move(next)));
      }
      states[id].children = std::move(children);
    }
    return id;
  }

  State saturate(const Bits& entry) {
    State st;
    st.entry = entry;
    st.sat = entry;
    std::vector<int> missing(axioms.size(), 0);
    std::vector<int> ready;
    for (int j : horn_like) {
      missing[j] = static_cast<int>(axioms[j].lhs.size());
      if (missing[j] == 0) ready.push_back(j);
    }
    auto add_atom = [&](int a) {
      for (int j : watchers[a]) {
        if (--missing[j] == 0) ready.push_back(j);
      }
    };
    for (std::size_t a = 0; a < atom_formulas.size(); ++a) {
      if (test_bit(entry, static_cast<int>(a))) add_atom(static_cast<int>(a));
    }
    std::size_t cursor = 0;
    while (cursor < ready.size()) {
      int j = ready[cursor++];
      const Axiom& ax = axioms[j];
      if (ax.contradiction) {
        st.closing_axiom = j;
        trim(st.sat);
        return st;
      }
      bool fired = false;
      for (int a : ax.leaves[0].atoms) {
        if (!test_bit(st.sat, a)) {
          set_bit(st.sat, a);
          fired = true;
          add_atom(a);
        }
      }
      if (fired) st.firings.push_back(j);
    }
    trim(st.sat);
    for (int j : branching) {
      const Axiom& ax = axioms[j];
      if (!subset(ax.lhs, st.sat)) continue;
      bool satisfied = false;
      for (const auto& leaf : ax.leaves) {
        if (!leaf.bottom && subset(leaf.atoms, st.sat)) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        st.branch_axiom = j;
        break;
      }
    }
    return st;
  }

  Goal compile_goal(const Formula& f) {
    Goal g;
    g.kind = f->kind;
    switch (f->kind) {
      case Kind::kTop:
      case Kind::kBot:
        return g;
      case Kind::kAnd:
      case Kind::kOr:
        for (const auto& c : f->children) g.children.push_back(compile_goal(c));
        return g;
      default:
        if (is_atom(f) && free_names(f).empty()) {
          g.atom = atom_id(f);
          return g;
        }
    }
    throw std::invalid_argument("goal succedent is not quantifier-free coherent: " + format_formula(f));
  }

  static bool eval(const Goal& g, const Bits& s) {
    switch (g.kind) {
      case Kind::kTop:
        return true;
      case Kind::kBot:
        return false;
      case Kind::kAnd:
        for (const auto& c : g.children) {
          if (!eval(c, s)) return false;
        }
        return true;
      case Kind::kOr:
        for (const auto& c : g.children) {
          if (eval(c, s)) return true;
        }
        return false;
      default:
        return test_bit(s, g.atom);
    }
  }

  bool holds(int id, const Goal& goal, std::vector<signed char>& memo) {
    if (static_cast<std::size_t>(id) >= memo.size()) memo.resize(states.size(), -1);
    if (memo[id] >= 0) return memo[id] != 0;
    const State& st = states[id];
    bool r;
    if (st.closing_axiom >= 0 || eval(goal, st.sat)) {
      r = true;
    } else if (st.branch_axiom < 0) {
      r = false;
    } else {
      r = true;
      std::vector<int> kids = st.children;
      for (int c : kids) {
        if (c >= 0 && !holds(c, goal, memo)) {
          r = false;
          break;
        }
      }
    }
    memo[id] = r ? 1 : 0;
    return r;
  }

  // ---- derivation reconstruction ----

  const Bits& atoms_of(const Formula& f) {
    auto it = atoms_of_cache.find(f.get());
    if (it != atoms_of_cache.end()) return it->second;
    Bits b;
    if (is_atom(f)) {
      set_bit(b, atom_id(f));
    } else if (f->kind == Kind::kAnd) {
      for (const auto& c : f->children) {
        const Bits& cb = atoms_of(c);
        if (cb.size() > b.size()) b.resize(cb.size(), 0);
        for (std::size_t i = 0; i < cb.size(); ++i) b[i] |= cb[i];
      }
    }
    keep_alive.push_back(f);
    return atoms_of_cache.emplace(f.get(), std::move(b)).first->second;
  }

  // phi |- atom, for an atom occurring in the conjunction tree phi.
  Derivation project(const Formula& phi, int atom) {
    auto key = std::make_pair(phi.get(), atom);
    auto it = projections.find(key);
    if (it != projections.end()) return it->second;
    Derivation d;
    if (is_atom(phi)) {
      d = identity(phi);
    } else {
      const Formula& left = phi->children[0];
      const Formula& right = phi->children[1];
      bool go_right = test_bit(atoms_of(right), atom);
      const Formula& part = go_right ? right : left;
      Derivation elim = node(go_right ? "and-elim-right" : "and-elim-left", phi, part);
      d = is_atom(part) ? elim : cut(elim, project(part, atom));
    }
    keep_alive.push_back(phi);
    projections.emplace(key, d);
    return d;
  }

  // phi |- target, target a conjunction of atoms and true over atoms of phi.
  Derivation build(const Formula& phi, const Formula& target) {
    if (target->kind == Kind::kTop) return top_intro(phi);
    if (is_atom(target)) return project(phi, atom_id(target));
    return and_intro(build(phi, target->children[0]), build(phi, target->children[1]));
  }

  const Formula& canon(int id) {
    if (!canon_cache[id]) {
      Formula f;
      for (std::size_t a = 0; a < atom_formulas.size(); ++a) {
        if (!test_bit(states[id].entry, static_cast<int>(a))) continue;
        f = f ? fm::conj(f, atom_formulas[a]) : atom_formulas[a];
      }
      canon_cache[id] = f ? f : fm::top();
    }
    return canon_cache[id];
  }

  Derivation axiom_node(int j) {
    RuleData data;
    data.index = static_cast<std::size_t>(j);
    return make_derivation("axiom", theory[j], {}, data);
  }

  // phi |- R & phi for an axiom L |- R whose antecedent holds in phi.
  Derivation open_axiom(const Formula& phi, int j) {
    return and_intro(cut(build(phi, theory[j].lhs), axiom_node(j)), identity(phi));
  }

  const Chain& chain(int id) {
    if (!chains[id]) {
      Formula phi = canon(id);
      Derivation d;
      for (int j : states[id].firings) {
        Derivation step = and_intro(identity(phi), cut(build(phi, theory[j].lhs), axiom_node(j)));
        d = d ? cut(d, step) : step;
        phi = step->conclusion.rhs;
      }
      chains[id] = Chain{d, phi};
    }
    return *chains[id];
  }

  struct GoalBuild {
    Formula succedent;
    Goal goal;
    std::unordered_map<int, Derivation> done;
  };

  // phi |- psi where psi holds propositionally in the atoms of phi.
  Derivation show(const Formula& phi, const Formula& psi, const Goal& g, const Bits& s) {
    switch (g.kind) {
      case Kind::kTop:
        return top_intro(phi);
      case Kind::kAnd: {
        if (psi->indexed) {
          std::vector<Derivation> parts;
          for (std::size_t i = 0; i < g.children.size(); ++i) {
            parts.push_back(show(phi, psi->children[i], g.children[i], s));
          }
          return make_derivation("bigand-intro", seq(phi, psi), std::move(parts));
        }
        return and_intro(show(phi, psi->children[0], g.children[0], s), show(phi, psi->children[1], g.children[1], s));
      }
      case Kind::kOr: {
        for (std::size_t i = 0; i < g.children.size(); ++i) {
          if (!eval(g.children[i], s)) continue;
          Derivation inner = show(phi, psi->children[i], g.children[i], s);
          Derivation intro;
          if (psi->indexed) {
            RuleData data;
            data.index = i;
            intro = node("bigor-intro", psi->children[i], psi, {}, data);
          } else {
            intro = node(i == 0 ? "or-intro-left" : "or-intro-right", psi->children[i], psi);
          }
          return cut(inner, intro);
        }
        break;
      }
      default:
        return project(phi, g.atom);
    }
    throw std::logic_error("prover: succedent does not hold in the saturated state");
  }

  // R & phi |- psi, splitting R into its disjuncts; `leaf` walks the children of the split.
  Derivation split(const Formula& r, const Formula& phi, const State& st, std::size_t& leaf, GoalBuild& gb) {
    Formula lhs = fm::conj(r, phi);
    if (r->kind == Kind::kOr) {
      std::vector<Formula> distributed;
      std::vector<Derivation> cases;
      for (const auto& c : r->children) {
        distributed.push_back(fm::conj(c, phi));
        cases.push_back(split(c, phi, st, leaf, gb));
      }
      Formula dist = r->indexed ? fm::big_or(distributed) : fm::disj(distributed[0], distributed[1]);
      Derivation frob = node("frobenius-or", lhs, dist);
      Derivation elim = make_derivation(r->indexed ? "bigor-elim" : "or-elim", seq(dist, gb.succedent), std::move(cases));
      return cut(frob, elim);
    }
    std::size_t k = leaf++;
    if (r->kind == Kind::kBot) return cut(node("and-elim-left", lhs, r), bot_elim(gb.succedent));
    int child = st.children[k];
    const Formula& target = canon(child);
    return cut(build(lhs, target), derive_state(child, gb));
  }

  // canon(entry) |- psi
  Derivation derive_state(int id, GoalBuild& gb) {
    auto it = gb.done.find(id);
    if (it != gb.done.end()) return it->second;
    const Chain& ch = chain(id);
    Formula phi = ch.phi_sat;
    Derivation pre = ch.derivation;
    const State& st = states[id];
    Derivation tail;
    if (st.closing_axiom >= 0) {
      std::size_t leaf = 0;
      tail = cut(open_axiom(phi, st.closing_axiom), split(theory[st.closing_axiom].rhs, phi, st, leaf, gb));
    } else if (eval(gb.goal, st.sat)) {
      tail = show(phi, gb.succedent, gb.goal, st.sat);
    } else {
      std::size_t leaf = 0;
      tail = cut(open_axiom(phi, st.branch_axiom), split(theory[st.branch_axiom].rhs, phi, st, leaf, gb));
    }
    Derivation d = pre ? cut(pre, tail) : tail;
    gb.done.emplace(id, d);
    return d;
  }

  // ---- goals ----

  // Disjunction of conjunctions of atoms (or false) on the left.
  void antecedent_cases(const Formula& f, std::vector<Formula>& out) {
    if (f->kind == Kind::kOr) {
      for (const auto& c : f->children) antecedent_cases(c, out);
      return;
    }
    out.push_back(f);
  }

  int entry_state(const Formula& conj) {
    std::vector<int> atoms;
    if (!collect_conjunction(conj, atoms)) {
      throw std::invalid_argument("goal antecedent is not a conjunction of atoms: " + format_formula(conj));
    }
    Bits b;
    for (int a : atoms) set_bit(b, a);
    return state_for(std::move(b));
  }

  void check_goal(const Sequent& goal) {
    if (!goal.context.empty()) throw std::invalid_argument("goal must have an empty context");
  }

  bool decide(const Formula& lhs, const Goal& goal, std::vector<signed char>& memo) {
    if (lhs->kind == Kind::kOr) {
      for (const auto& c : lhs->children) {
        if (!decide(c, goal, memo)) return false;
      }
      return true;
    }
    if (lhs->kind == Kind::kBot) return true;
    return holds(entry_state(lhs), goal, memo);
  }

  Derivation derive_goal(const Formula& lhs, GoalBuild& gb) {
    if (lhs->kind == Kind::kOr) {
      std::vector<Derivation> cases;
      for (const auto& c : lhs->children) cases.push_back(derive_goal(c, gb));
      return make_derivation(lhs->indexed ? "bigor-elim" : "or-elim", seq(lhs, gb.succedent), std::move(cases));
    }
    if (lhs->kind == Kind::kBot) return bot_elim(gb.succedent);
    int id = entry_state(lhs);
    return cut(build(lhs, canon(id)), derive_state(id, gb));
  }
};

CoherentProver::CoherentProver(std::vector<Sequent> theory) : impl_(std::make_shared<Impl>(std::move(theory))) {}

const std::vector<Sequent>& CoherentProver::theory() const { return impl_->theory; }

bool CoherentProver::entails(const Sequent& goal) {
  impl_->check_goal(goal);
  Impl::Goal g = impl_->compile_goal(goal.rhs);
  std::vector<signed char> memo;
  return impl_->decide(goal.lhs, g, memo);
}

std::optional<Derivation> CoherentProver::prove(const Sequent& goal) {
  if (!entails(goal)) return std::nullopt;
  Impl::GoalBuild gb{goal.rhs, impl_->compile_goal(goal.rhs), {}};
  return impl_->derive_goal(goal.lhs, gb);
}

std::size_t CoherentProver::state_count() const { return impl_->states.size(); }

std::optional<Derivation> coherent_prove(const std::vector<Sequent>& theory, const Sequent& goal) {
  CoherentProver p(theory);
  return p.prove(goal);
}

}  // namespace zariski
