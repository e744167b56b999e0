#include "zariski/groebner.hpp"

#include <algorithm>
#include <list>

namespace zariski {

namespace {

using Row = std::vector<Polynomial>;

struct Entry {
  Polynomial poly;
  Row row;
  std::uint32_t sugar = 0;
  bool live = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

Row row_add(const PolyContext& ctx, const Row& a, const Row& b) {
  Row out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ctx.add(a[k], b[k]);
  return out;
}

Row row_mul_term(const PolyContext& ctx, const Row& a, const Monomial& m, const Rational& c) {
  Row out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ctx.mul_term(a[k], m, c);
  return out;
}

Row row_scale(const PolyContext& ctx, const Row& a, const Rational& c) {
  Row out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ctx.scale(a[k], c);
  return out;
}

// Fully reduces p (with row) by the live entries, excluding index `skip`.
void reduce_entry(const PolyContext& ctx, Polynomial& p, Row& row, const std::vector<Entry>& g,
                  bool track, std::size_t skip = static_cast<std::size_t>(-1)) {
  Polynomial rest = p;
  std::vector<Term> rem;
  while (!rest.is_zero()) {
    const Term lead = rest.terms.front();
    bool hit = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == skip || !g[k].live) continue;
      const Term& gl = g[k].poly.terms.front();
      if (!divides(gl.mono, lead.mono)) continue;
      Monomial m = monomial_div(lead.mono, gl.mono);
      Rational c = ctx.field().mul(lead.coeff, ctx.field().inv(gl.coeff));
      rest = ctx.sub(rest, ctx.mul_term(g[k].poly, m, c));
      if (track) row = row_add(ctx, row, row_mul_term(ctx, g[k].row, m, ctx.field().neg(c)));
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(lead);
      rest.terms.erase(rest.terms.begin());
    }
  }
  p.terms = std::move(rem);
}

}  // namespace

TrackedBasis groebner_basis(const PolyContext& ctx, const std::vector<Polynomial>& inputs, bool track) {
  const std::size_t n = inputs.size();
  std::vector<Entry> g;
  std::list<Pair> pairs;

  auto make_pair = [&](std::size_t i, std::size_t j) {
    const Monomial& li = g[i].poly.terms.front().mono;
    const Monomial& lj = g[j].poly.terms.front().mono;
    Monomial l = monomial_lcm(li, lj);
    std::uint32_t s = std::max(g[i].sugar + total_degree(monomial_div(l, li)),
                               g[j].sugar + total_degree(monomial_div(l, lj)));
    pairs.push_back({i, j, std::move(l), s});
  };

  auto insert = [&](Polynomial p, Row row, std::uint32_t sugar) {
    Rational inv = ctx.field().inv(p.terms.front().coeff);
    p = ctx.scale(p, inv);
    if (track) row = row_scale(ctx, row, inv);
    std::size_t idx = g.size();
    g.push_back({std::move(p), std::move(row), sugar, true});
    for (std::size_t k = 0; k < idx; ++k) make_pair(k, idx);
  };

  for (std::size_t j = 0; j < n; ++j) {
    if (inputs[j].is_zero()) continue;
    Row row;
    if (track) {
      row.assign(n, Polynomial{});
      row[j] = ctx.one();
    }
    std::uint32_t deg = 0;
    for (const auto& t : inputs[j].terms) deg = std::max(deg, total_degree(t.mono));
    insert(inputs[j], std::move(row), deg);
  }

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pairs) {
      if (p.i == a && p.j == b) return true;
    }
    return false;
  };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && ctx.order().compare(it->lcm, best->lcm) < 0)) {
        best = it;
      }
    }
    Pair pr = *best;
    pairs.erase(best);

    const Monomial& li = g[pr.i].poly.terms.front().mono;
    const Monomial& lj = g[pr.j].poly.terms.front().mono;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(g[k].poly.terms.front().mono, pr.lcm)) continue;
      if (!pending(pr.i, k) && !pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    Monomial mi = monomial_div(pr.lcm, li);
    Monomial mj = monomial_div(pr.lcm, lj);
    Polynomial s = ctx.sub(ctx.mul_term(g[pr.i].poly, mi, Rational(1)),
                           ctx.mul_term(g[pr.j].poly, mj, Rational(1)));
    Row row;
    if (track) {
      row = row_add(ctx, row_mul_term(ctx, g[pr.i].row, mi, Rational(1)),
                    row_mul_term(ctx, g[pr.j].row, mj, Rational(-1)));
    }
    reduce_entry(ctx, s, row, g, track);
    if (!s.is_zero()) insert(std::move(s), std::move(row), pr.sugar);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (i == k || !g[k].live) continue;
      const Monomial& lk = g[k].poly.terms.front().mono;
      const Monomial& li = g[i].poly.terms.front().mono;
      if (divides(lk, li) && (lk != li || k < i)) {
        g[i].live = false;
        break;
      }
    }
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].live) continue;
    Polynomial head;
    head.terms.push_back(g[i].poly.terms.front());
    Polynomial tail = g[i].poly;
    tail.terms.erase(tail.terms.begin());
    // g_i - sum q_k g_k: the row picks up the same multiples
    reduce_entry(ctx, tail, g[i].row, g, track, i);
    g[i].poly = ctx.add(head, tail);
  }

  TrackedBasis out;
  out.input_count = n;
  out.tracked = track;
  for (auto& e : g) {
    if (!e.live) continue;
    out.basis.push_back(std::move(e.poly));
    if (track) out.transform.push_back(std::move(e.row));
  }
  return out;
}

TrackedReduction reduce_tracked(const PolyContext& ctx, const Polynomial& f, const TrackedBasis& gb) {
  auto div = ctx.divide(f, gb.basis);
  TrackedReduction out;
  out.remainder = std::move(div.remainder);
  if (!gb.tracked) return out;
  out.cofactors.assign(gb.input_count, Polynomial{});
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (div.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gb.input_count; ++j) {
      out.cofactors[j] = ctx.add(out.cofactors[j], ctx.mul(div.quotients[i], gb.transform[i][j]));
    }
  }
  return out;
}

Polynomial normal_form(const PolyContext& ctx, const Polynomial& f, const std::vector<Polynomial>& basis) {
  return ctx.divide(f, basis).remainder;
}

}  // namespace zariski
