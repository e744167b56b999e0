#include "zariski/oracles.hpp"

#include <numeric>
#include <unordered_map>

#include "zariski/errors.hpp"

namespace zariski {

namespace {

using u64 = std::uint64_t;
using Kind = FormulaNode::Kind;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % n); }
u64 addmod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<unsigned __int128>(a) + b) % n); }
u64 submod(u64 a, u64 b, u64 n) { return addmod(a, n - b % n, n); }

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

unsigned bits(u64 n) {
  unsigned b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

u64 small_modulus_of(const Ring& ring) {
  if (!ring.is_modular()) throw UnsupportedRing("brute-force oracles need Z/n, got " + ring.describe());
  return ring.small_modulus();
}

u64 residue(const Elem& e) { return e.integer().get_ui(); }

}  // namespace

std::vector<std::uint64_t> PrimeFilter::elements() const {
  std::vector<u64> out;
  for (u64 i = 0; i < modulus; ++i) {
    if (members[i]) out.push_back(i);
  }
  return out;
}

std::string PrimeFilter::str() const {
  std::string out = "{";
  bool first = true;
  for (u64 x : elements()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

bool is_prime_filter(std::uint64_t n, const std::vector<bool>& members) {
  if (members.size() != n) return false;
  if (members[0] || !members[1 % n]) return false;
  for (u64 x = 0; x < n; ++x) {
    for (u64 y = 0; y < n; ++y) {
      if (members[addmod(x, y, n)] && !members[x] && !members[y]) return false;
      if (members[mulmod(x, y, n)] != (members[x] && members[y])) return false;
    }
  }
  return true;
}

std::vector<PrimeFilter> enumerate_prime_filters(const Ring& ring) {
  u64 n = small_modulus_of(ring);
  std::vector<PrimeFilter> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::vector<bool> members(n);
    for (u64 x = 0; x < n; ++x) members[x] = x % d != 0;
    if (is_prime_filter(n, members)) out.push_back({n, std::move(members)});
  }
  return out;
}

std::vector<PrimeFilter> enumerate_prime_filters_exhaustive(std::uint64_t n) {
  if (n == 0 || n > 20) throw UnsupportedRing("exhaustive filter search is limited to n <= 20");
  std::vector<PrimeFilter> out;
  for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
    std::vector<bool> members(n);
    for (u64 x = 0; x < n; ++x) members[x] = (mask >> x) & 1;
    if (is_prime_filter(n, members)) out.push_back({n, std::move(members)});
  }
  return out;
}

bool semantic_entails(const Ring& ring, const Elem& f, const std::vector<Elem>& gs) {
  for (const auto& filter : enumerate_prime_filters(ring)) {
    if (!filter.contains(residue(f))) continue;
    bool hit = false;
    for (const auto& g : gs) hit = hit || filter.contains(residue(g));
    if (!hit) return false;
  }
  return true;
}

bool in_radical_u64(std::uint64_t n, const std::vector<std::uint64_t>& gens, std::uint64_t h) {
  u64 d = n;
  for (u64 g : gens) d = std::gcd(d, g % n);
  // x lies in the ideal (g_1, ..., g_k) of Z/n iff gcd(g_1, ..., g_k, n) divides x.
  u64 p = h % n;
  for (unsigned k = 1; k <= bits(n); ++k) {
    if (p % d == 0) return true;
    p = mulmod(p, h, n);
  }
  return p % d == 0;
}

namespace {

struct Frac {
  u64 num;
  u64 den;
};

class Brute {
 public:
  Brute(u64 n, const BruteOptions& opt) : n_(n), e_(bits(n)), opt_(opt) {}

  bool forced(u64 h, const Formula& f, const std::map<std::string, Frac>& env) {
    bool closed = is_closed(f, env);
    std::pair<const FormulaNode*, u64> key{f.get(), h};
    if (closed) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    bool r = compute(h, f, env);
    if (closed) memo_[key] = r;
    return r;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<const FormulaNode*, u64>& k) const {
      return std::hash<const void*>()(k.first) * 1000003u ^ std::hash<u64>()(k.second);
    }
  };

  bool is_closed(const Formula& f, const std::map<std::string, Frac>& env) {
    if (env.empty()) return true;
    auto it = free_cache_.find(f.get());
    if (it == free_cache_.end()) it = free_cache_.emplace(f.get(), free_names(f)).first;
    for (const auto& name : it->second) {
      if (env.count(name)) return false;
    }
    return true;
  }

  bool nilpotent(u64 h) const {
    u64 p = h % n_;
    for (unsigned k = 1; k <= e_; ++k) {
      if (p == 0) return true;
      p = mulmod(p, h, n_);
    }
    return p == 0;
  }

  Frac eval(const Expr& t, const std::map<std::string, Frac>& env) const {
    switch (t->op) {
      case ExprNode::Op::kNum: {
        Integer r = t->num % Integer(static_cast<unsigned long>(n_));
        return {r.get_ui(), 1 % n_};
      }
      case ExprNode::Op::kName: {
        auto it = env.find(t->name);
        if (it != env.end()) return it->second;
        auto jt = opt_.env.find(t->name);
        if (jt != opt_.env.end()) return {jt->second % n_, 1 % n_};
        throw UnboundVariable("oracle: unbound name '" + t->name + "'");
      }
      case ExprNode::Op::kAdd:
      case ExprNode::Op::kSub: {
        Frac a = eval(t->args[0], env);
        Frac b = eval(t->args[1], env);
        u64 l = mulmod(a.num, b.den, n_);
        u64 r = mulmod(b.num, a.den, n_);
        return {t->op == ExprNode::Op::kAdd ? addmod(l, r, n_) : submod(l, r, n_), mulmod(a.den, b.den, n_)};
      }
      case ExprNode::Op::kMul: {
        Frac a = eval(t->args[0], env);
        Frac b = eval(t->args[1], env);
        return {mulmod(a.num, b.num, n_), mulmod(a.den, b.den, n_)};
      }
      case ExprNode::Op::kNeg: {
        Frac a = eval(t->args[0], env);
        return {submod(0, a.num, n_), a.den};
      }
      case ExprNode::Op::kPow: {
        Frac a = eval(t->args[0], env);
        return {powmod(a.num, t->exponent, n_), powmod(a.den, t->exponent, n_)};
      }
      case ExprNode::Op::kDiv:
        throw UnsupportedRing("oracle: division in terms");
    }
    throw ParseError("bad expression");
  }

  // Denominators are always units at h, so cross-multiplication decides equality.
  bool equal_at(u64 h, const Frac& a, const Frac& b) const {
    u64 diff = submod(mulmod(a.num, b.den, n_), mulmod(b.num, a.den, n_), n_);
    u64 p = diff;
    for (unsigned k = 0; k <= e_; ++k) {
      if (p == 0) return true;
      p = mulmod(p, h, n_);
    }
    return p == 0;
  }

  bool in_radical_of_principal(u64 h, u64 t) const { return in_radical_u64(n_, {t}, h); }

  // f^k = f g_1 + ... + f g_m with every g_i in good, for some k <= E.
  bool partition(u64 f, const std::vector<bool>& good) const {
    std::vector<bool> reach(n_, false);
    reach[0] = true;
    std::vector<u64> frontier = {0};
    std::vector<u64> steps;
    for (u64 g = 0; g < n_; ++g) {
      if (good[g]) steps.push_back(mulmod(f, g, n_));
    }
    while (!frontier.empty()) {
      u64 s = frontier.back();
      frontier.pop_back();
      for (u64 step : steps) {
        u64 t = addmod(s, step, n_);
        if (!reach[t]) {
          reach[t] = true;
          frontier.push_back(t);
        }
      }
    }
    u64 p = 1 % n_;
    for (unsigned k = 0; k <= e_; ++k) {
      if (reach[p]) return true;
      p = mulmod(p, f, n_);
    }
    return false;
  }

  std::map<std::string, Frac> bind(const std::map<std::string, Frac>& env, const std::string& var, Frac v) const {
    std::map<std::string, Frac> out = env;
    out[var] = v;
    return out;
  }

  bool witness_exists(u64 fg, const Formula& f, const std::map<std::string, Frac>& env) {
    u64 den = powmod(fg, e_, n_);
    for (u64 a = 0; a < n_; ++a) {
      if (forced(fg, f->children[0], bind(env, f->var, {a, den}))) return true;
    }
    return false;
  }

  bool compute(u64 h, const Formula& f, const std::map<std::string, Frac>& env) {
    switch (f->kind) {
      case Kind::kTop:
        return true;
      case Kind::kBot:
        return nilpotent(h);
      case Kind::kBeta:
        if (!opt_.beta) throw UnsupportedRing("oracle: beta has no interpretation");
        return in_radical_u64(n_, *opt_.beta, h);
      case Kind::kEq:
        return equal_at(h, eval(f->terms[0], env), eval(f->terms[1], env));
      case Kind::kPred: {
        Frac t = eval(f->terms[0], env);
        if (t.den != 1 % n_) throw UnsupportedRing("oracle: D(-) of a fraction");
        return in_radical_of_principal(h, t.num);
      }
      case Kind::kAnd:
        for (const auto& c : f->children) {
          if (!forced(h, c, env)) return false;
        }
        return true;
      case Kind::kOr: {
        std::vector<bool> good(n_);
        for (u64 g = 0; g < n_; ++g) {
          u64 hg = mulmod(h, g, n_);
          for (const auto& c : f->children) {
            if (forced(hg, c, env)) {
              good[g] = true;
              break;
            }
          }
        }
        return partition(h, good);
      }
      case Kind::kImp:
        for (u64 g = 0; g < n_; ++g) {
          u64 hg = mulmod(h, g, n_);
          if (forced(hg, f->children[0], env) && !forced(hg, f->children[1], env)) return false;
        }
        return true;
      case Kind::kForall:
        for (u64 g = 0; g < n_; ++g) {
          u64 hg = mulmod(h, g, n_);
          u64 den = powmod(hg, e_, n_);
          for (u64 a = 0; a < n_; ++a) {
            if (!forced(hg, f->children[0], bind(env, f->var, {a, den}))) return false;
          }
        }
        return true;
      case Kind::kExists: {
        std::vector<bool> good(n_);
        for (u64 g = 0; g < n_; ++g) good[g] = witness_exists(mulmod(h, g, n_), f, env);
        return partition(h, good);
      }
    }
    return false;
  }

  u64 n_;
  unsigned e_;
  const BruteOptions& opt_;
  std::unordered_map<std::pair<const FormulaNode*, u64>, bool, KeyHash> memo_;
  std::unordered_map<const FormulaNode*, std::set<std::string>> free_cache_;
};

}  // namespace

std::vector<bool> brute_forcing_set(const Ring& ring, const Formula& phi, const BruteOptions& options) {
  u64 n = small_modulus_of(ring);
  Brute b(n, options);
  std::vector<bool> out(n);
  for (u64 h = 0; h < n; ++h) out[h] = b.forced(h, phi, {});
  return out;
}

Open brute_truth_open(const Ring& ring, const Formula& phi, const BruteOptions& options) {
  std::vector<bool> forced = brute_forcing_set(ring, phi, options);
  std::vector<Elem> gens;
  for (u64 h = 0; h < forced.size(); ++h) {
    if (forced[h]) gens.push_back(ring.from_integer(Integer(static_cast<unsigned long>(h))));
  }
  return Open(Ideal(ring, std::move(gens)));
}

bool open_matches_set(const Open& u, const std::vector<bool>& forced) {
  u64 n = small_modulus_of(u.ring());
  if (forced.size() != n) return false;
  std::vector<u64> gens;
  for (const auto& g : u.support().generators()) gens.push_back(residue(g));
  for (u64 h = 0; h < n; ++h) {
    if (in_radical_u64(n, gens, h) != forced[h]) return false;
  }
  return true;
}

}  // namespace zariski
