#include "zariski/apps.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "zariski/errors.hpp"

namespace zariski {

using nlohmann::json;

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, ring.zero()) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match its shape");
  for (const auto& e : entries_) {
    if (e.ring() != ring_) throw RingMismatch("matrix entry from another ring");
  }
}

void Matrix::set(std::size_t i, std::size_t j, Elem e) {
  if (e.ring() != ring_) throw RingMismatch("matrix entry from another ring");
  entries_[i * cols_ + j] = std::move(e);
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Elem& e) { return e.is_zero(); });
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits on `sep` at bracket depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Elem> parse_row(const Ring& ring, const std::string& text) {
  std::vector<Elem> row;
  std::string t = strip(text);
  if (t.empty()) return row;
  for (const auto& part : split_top(t, ',')) {
    std::string p = strip(part);
    if (p.empty()) throw ParseError("empty matrix entry in \"" + text + "\"");
    row.push_back(ring.parse_elem(p));
  }
  return row;
}

}  // namespace

Matrix parse_matrix(const Ring& ring, const std::string& text) {
  std::string t = strip(text);
  std::vector<std::vector<Elem>> rows;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw ParseError("unbalanced brackets in matrix \"" + text + "\"");
    std::string inner = strip(t.substr(1, t.size() - 2));
    if (!inner.empty()) {
      for (const auto& part : split_top(inner, ',')) {
        std::string r = strip(part);
        if (r.size() < 2 || r.front() != '[' || r.back() != ']') {
          throw ParseError("matrix rows must be bracketed in \"" + text + "\"");
        }
        rows.push_back(parse_row(ring, r.substr(1, r.size() - 2)));
      }
    }
  } else if (!t.empty()) {
    for (const auto& part : split_top(t, ';')) rows.push_back(parse_row(ring, part));
  }
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Elem> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("matrix rows have different lengths in \"" + text + "\"");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(ring, rows.size(), cols, std::move(entries));
}

std::vector<Elem> mat_vec(const Matrix& m, const std::vector<Elem>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match the matrix");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Elem s = m.ring().zero();
    for (std::size_t j = 0; j < m.cols(); ++j) s = s + m.at(i, j) * v[j];
    out.push_back(s);
  }
  return out;
}

namespace {

Integer bareiss(std::vector<std::vector<Integer>> a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Elem cofactor_det(const Ring& ring, const std::vector<std::vector<Elem>>& a) {
  std::size_t n = a.size();
  if (n == 0) return ring.one();
  if (n == 1) return a[0][0];
  Elem total = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Elem>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Elem> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      sub.push_back(std::move(row));
    }
    Elem term = a[0][j] * cofactor_det(ring, sub);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// Combinations of k indices out of n, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

Elem determinant(const Matrix& square) {
  if (square.rows() != square.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = square.rows();
  if (square.ring().is_integers()) {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = square.at(i, j).integer();
    }
    return square.ring().from_integer(bareiss(std::move(a)));
  }
  std::vector<std::vector<Elem>> a;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(square.at(i, j));
    a.push_back(std::move(row));
  }
  return cofactor_det(square.ring(), a);
}

Ideal minors(const Matrix& m, std::size_t size) {
  if (size > std::min(m.rows(), m.cols())) {
    throw std::out_of_range("minor size " + std::to_string(size) + " exceeds the matrix shape");
  }
  if (size == 0) return Ideal(m.ring(), {m.ring().one()});
  std::vector<Elem> gens;
  auto rows = combinations(m.rows(), size);
  auto cols = combinations(m.cols(), size);
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      std::vector<Elem> entries;
      for (auto i : r) {
        for (auto j : c) entries.push_back(m.at(i, j));
      }
      gens.push_back(determinant(Matrix(m.ring(), size, size, std::move(entries))));
    }
  }
  return Ideal(m.ring(), std::move(gens));
}

std::optional<std::vector<Elem>> kernel_vector(const Matrix& m) {
  if (!m.ring().is_modular()) throw UnsupportedRing("kernel enumeration needs a finite ring");
  std::uint64_t n = m.ring().small_modulus();
  std::size_t c = m.cols();
  std::vector<std::uint64_t> entries(m.rows() * c);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < c; ++j) entries[i * c + j] = m.at(i, j).integer().get_ui();
  }
  std::vector<std::uint64_t> v(c, 0);
  auto advance = [&]() {
    for (std::size_t j = 0; j < c; ++j) {
      if (++v[j] < n) return true;
      v[j] = 0;
    }
    return false;
  };
  while (advance()) {
    bool in_kernel = true;
    for (std::size_t i = 0; i < m.rows() && in_kernel; ++i) {
      unsigned __int128 s = 0;
      for (std::size_t j = 0; j < c; ++j) s += static_cast<unsigned __int128>(entries[i * c + j]) * v[j];
      in_kernel = static_cast<std::uint64_t>(s % n) == 0;
    }
    if (in_kernel) {
      std::vector<Elem> out;
      for (auto x : v) out.push_back(m.ring().from_integer(Integer(static_cast<unsigned long>(x))));
      return out;
    }
  }
  return std::nullopt;
}

// ---- localizations of Z/n ----

Ring localize_modular(const Ring& ring, const Elem& f) {
  if (!ring.is_modular()) throw UnsupportedRing("localize_modular needs Z/n");
  Integer m = ring.modulus();
  Integer g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), f.integer().get_mpz_t());
    if (g == 1) break;
    m /= g;
  }
  return Ring::modular(m);
}

Elem to_localization(const Ring& localized, const Elem& x) { return localized.from_integer(x.integer()); }

Elem lift_from_localization(const Ring& ring, const Elem& x) {
  const Integer& n = ring.modulus();
  const Integer& m = x.ring().modulus();
  if (m == 1) return ring.zero();
  Integer c = n / m;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::invalid_argument(x.ring().describe() + " is not a localization of " + ring.describe());
  }
  return ring.from_integer(c * ((x.integer() * inv) % m));
}

namespace {

Ideal zero_ideal(const Ring& ring) { return Ideal(ring, {ring.zero()}); }

void require_reduced_modular(const Ring& ring, const char* what) {
  if (!ring.is_modular()) throw UnsupportedRing(std::string(what) + " needs a finite ring Z/n");
  if (!is_squarefree(ring.modulus())) {
    throw UnsupportedRing(std::string(what) + " needs a reduced ring; " + ring.describe() + " is not");
  }
}

Elem inverse_in(const Elem& e) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), e.integer().get_mpz_t(), e.ring().modulus().get_mpz_t()) == 0) {
    throw std::logic_error(e.str() + " is not invertible in " + e.ring().describe());
  }
  return e.ring().from_integer(inv);
}

// Image of m in B with row i and column j eliminated using the pivot m(i, j), a unit in B.
Matrix eliminate(const Matrix& m, const Ring& b, std::size_t pi, std::size_t pj) {
  Elem inv = inverse_in(to_localization(b, m.at(pi, pj)));
  Matrix out(b, m.rows() - 1, m.cols() - 1);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == pi) continue;
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == pj) continue;
      Elem v = to_localization(b, m.at(i, j)) -
               to_localization(b, m.at(i, pj)) * inv * to_localization(b, m.at(pi, j));
      out.set(oi, oj++, v);
    }
    ++oi;
  }
  return out;
}

MembershipCertificate unit_certificate_trivial() {
  MembershipCertificate c;
  c.exponent = 1;
  return c;
}

}  // namespace

TrivialityCertificate trivial_ring_certificate(const Ring& ring) {
  TrivialityCertificate cert{ring, {}, {}, {}, unit_certificate_trivial()};
  if (!verify_triviality(cert)) throw CertificateError(ring.describe() + " is not the trivial ring");
  return cert;
}

bool verify_triviality(const TrivialityCertificate& cert) {
  const Ring& a = cert.ring;
  for (const auto& s : cert.steps) {
    if (s.entry.ring() != a || !s.localized) return false;
    if (!a.is_modular() || s.localized->ring != localize_modular(a, s.entry)) return false;
    if (!verify_triviality(*s.localized)) return false;
    if (!pow(s.entry, s.exponent).is_zero()) return false;
  }
  if (cert.kernel_vector.size() != cert.oracle_answer.size()) return false;
  Ideal zero = zero_ideal(a);
  for (std::size_t i = 0; i < cert.kernel_vector.size(); ++i) {
    const Elem& v = cert.kernel_vector[i];
    if (v.ring() != a) return false;
    if (v != (i == 0 ? a.one() : a.zero())) return false;
    if (!verify_certificate(v, zero, cert.oracle_answer[i])) return false;
  }
  return verify_certificate(a.one(), zero, cert.unit);
}

namespace {

json triviality_json(const TrivialityCertificate& cert) {
  json j;
  j["ring"] = cert.ring.describe();
  j["steps"] = json::array();
  for (const auto& s : cert.steps) {
    j["steps"].push_back({{"row", s.row},
                          {"col", s.col},
                          {"entry", s.entry.str()},
                          {"exponent", s.exponent},
                          {"localized", triviality_json(*s.localized)}});
  }
  j["kernel_vector"] = json::array();
  for (const auto& v : cert.kernel_vector) j["kernel_vector"].push_back(v.str());
  j["oracle_answer"] = json::array();
  for (const auto& c : cert.oracle_answer) j["oracle_answer"].push_back(json::parse(certificate_to_json(c)));
  j["unit"] = json::parse(certificate_to_json(cert.unit));
  return j;
}

TrivialityCertificate triviality_parse(const json& j) {
  Ring ring = make_ring(j.at("ring").get<std::string>());
  TrivialityCertificate cert{ring, {}, {}, {}, certificate_from_json(ring, j.at("unit").dump())};
  for (const auto& s : j.at("steps")) {
    auto sub = std::make_shared<TrivialityCertificate>(triviality_parse(s.at("localized")));
    cert.steps.push_back({s.at("row").get<std::size_t>(), s.at("col").get<std::size_t>(),
                          ring.parse_elem(s.at("entry").get<std::string>()), s.at("exponent").get<unsigned long>(),
                          sub});
  }
  for (const auto& v : j.at("kernel_vector")) cert.kernel_vector.push_back(ring.parse_elem(v.get<std::string>()));
  for (const auto& c : j.at("oracle_answer")) cert.oracle_answer.push_back(certificate_from_json(ring, c.dump()));
  return cert;
}

}  // namespace

std::string triviality_to_json(const TrivialityCertificate& cert) { return triviality_json(cert).dump(2); }

TrivialityCertificate triviality_from_json(const std::string& text) {
  try {
    return triviality_parse(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed triviality certificate: ") + e.what());
  }
}

// ---- injective wide matrices ----

InjectivityOracle zero_test_oracle() {
  return [](const Matrix&, const std::vector<Elem>& v) -> std::optional<std::vector<MembershipCertificate>> {
    std::vector<MembershipCertificate> out;
    for (const auto& x : v) {
      if (!x.is_zero()) return std::nullopt;
      out.push_back(unit_certificate_trivial());
    }
    return out;
  };
}

namespace {

std::vector<MembershipCertificate> consult(const Matrix& m, const std::vector<Elem>& v,
                                           const InjectivityOracle& oracle) {
  auto mv = mat_vec(m, v);
  for (const auto& x : mv) {
    if (!x.is_zero()) throw std::logic_error("oracle consulted on a vector outside the kernel");
  }
  auto answer = oracle(m, v);
  if (!answer) throw CertificateError("injectivity oracle could not certify a kernel vector to be zero");
  if (answer->size() != v.size()) throw CertificateError("injectivity oracle answered with the wrong length");
  Ideal zero = zero_ideal(m.ring());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!verify_certificate(v[i], zero, (*answer)[i])) {
      throw CertificateError("injectivity oracle answer for component " + std::to_string(i) + " does not verify");
    }
  }
  return *answer;
}

TrivialityCertificate richman_rec(const Matrix& m, const InjectivityOracle& oracle) {
  const Ring& a = m.ring();
  TrivialityCertificate cert{a, {}, {}, {}, unit_certificate_trivial()};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem& e = m.at(i, j);
      if (e.is_zero()) continue;
      Ring b = localize_modular(a, e);
      Matrix mb = eliminate(m, b, i, j);
      Elem inv = inverse_in(to_localization(b, e));
      InjectivityOracle sub = [&, i, j, inv](const Matrix& small, const std::vector<Elem>& vb)
          -> std::optional<std::vector<MembershipCertificate>> {
        (void)small;
        std::vector<Elem> full;
        Elem s = b.zero();
        for (std::size_t l = 0, k = 0; l < m.cols(); ++l) {
          if (l == j) continue;
          s = s + to_localization(b, m.at(i, l)) * vb[k++];
        }
        for (std::size_t l = 0, k = 0; l < m.cols(); ++l) {
          full.push_back(l == j ? -(inv * s) : vb[k++]);
        }
        std::vector<Elem> lifted;
        for (const auto& x : full) lifted.push_back(lift_from_localization(a, x));
        auto answer = consult(m, lifted, oracle);
        std::vector<MembershipCertificate> out;
        for (std::size_t l = 0; l < m.cols(); ++l) {
          if (l == j) continue;
          MembershipCertificate c;
          c.exponent = answer[l].exponent;
          for (const auto& cf : answer[l].cofactors) c.cofactors.push_back({to_localization(b, cf.u), cf.index});
          out.push_back(c);
        }
        return out;
      };
      auto localized = std::make_shared<TrivialityCertificate>(richman_rec(mb, sub));
      if (!verify_triviality(*localized)) throw CertificateError("localized certificate does not verify");
      unsigned long cap = bit_length(a.modulus()) + 1;
      unsigned long k = 1;
      while (k <= cap && !pow(e, k).is_zero()) ++k;
      if (k > cap) throw CertificateError(e.str() + " is not nilpotent although its localization is trivial");
      cert.steps.push_back({i, j, e, k, localized});
    }
  }
  // Every entry is nilpotent, hence zero in a reduced ring: (1, 0, ..., 0) is a kernel vector.
  std::vector<Elem> v(m.cols(), a.zero());
  v[0] = a.one();
  cert.oracle_answer = consult(m, v, oracle);
  cert.kernel_vector = v;
  cert.unit = cert.oracle_answer[0];
  return cert;
}

}  // namespace

TrivialityCertificate richman_trivializer(const Matrix& m, const InjectivityOracle& oracle) {
  require_reduced_modular(m.ring(), "richman_trivializer");
  if (m.cols() <= m.rows()) throw std::invalid_argument("richman_trivializer needs more columns than rows");
  TrivialityCertificate cert = richman_rec(m, oracle);
  if (!verify_triviality(cert)) throw CertificateError("composed triviality certificate does not verify");
  return cert;
}

RichmanOutcome richman_harness(const Matrix& m) {
  RichmanOutcome out;
  out.kernel = kernel_vector(m);
  if (!out.kernel) out.certificate = richman_trivializer(m, zero_test_oracle());
  return out;
}

// ---- McCoy ----

McCoyResult mccoy_regularity(const Matrix& m) {
  const Ring& r = m.ring();
  if (!r.is_modular() && !r.is_integers()) throw UnsupportedRing("mccoy_regularity needs Z or Z/n");
  Ideal lam = m.cols() > m.rows() ? Ideal(r, {}) : minors(m, m.cols());
  McCoyResult res{lam, std::nullopt, std::nullopt, std::nullopt};
  if (r.is_integers()) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (!lam.generators()[i].is_zero()) {
        res.nonzero_minor = i;
        return res;
      }
    }
    res.witness = r.one();
    return res;
  }
  Integer g = principal_generator(lam);
  if (g == 1) {
    res.unit_certificate = ideal_membership(lam, r.one());
    if (!res.unit_certificate) throw std::logic_error("unit ideal without a membership certificate");
  } else {
    res.witness = r.from_integer(r.modulus() / g);
  }
  return res;
}

bool verify_mccoy(const Matrix& m, const McCoyResult& result) {
  const Ring& r = m.ring();
  Ideal lam = m.cols() > m.rows() ? Ideal(r, {}) : minors(m, m.cols());
  if (!ideal_equal(lam, result.minors)) return false;
  if (result.witness) {
    if (result.witness->is_zero()) return false;
    for (const auto& g : result.minors.generators()) {
      if (!(*result.witness * g).is_zero()) return false;
    }
    return true;
  }
  if (result.unit_certificate) return verify_certificate(r.one(), result.minors, *result.unit_certificate);
  if (result.nonzero_minor) {
    return r.is_integers() && *result.nonzero_minor < result.minors.size() &&
           !result.minors.generators()[*result.nonzero_minor].is_zero();
  }
  return false;
}

// ---- simple generic freeness ----

namespace {

FreenessWitness freeness_rec(const Matrix& m) {
  const Ring& a = m.ring();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem& e = m.at(i, j);
      if (e.is_zero()) continue;
      Ring b = localize_modular(a, e);
      FreenessWitness sub = freeness_rec(eliminate(m, b, i, j));
      Elem f = e * lift_from_localization(a, sub.f);
      FreenessWitness w{f, sub.localized, sub.rank, {}};
      for (const auto& v : sub.basis) {
        std::vector<Elem> full;
        for (std::size_t k = 0, t = 0; k < m.rows(); ++k) full.push_back(k == i ? sub.localized.zero() : v[t++]);
        w.basis.push_back(std::move(full));
      }
      return w;
    }
  }
  FreenessWitness w{a.one(), a, m.rows(), {}};
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::vector<Elem> v(m.rows(), a.zero());
    v[k] = a.one();
    w.basis.push_back(std::move(v));
  }
  return w;
}

}  // namespace

GenericFreenessResult generic_freeness_simple(const Matrix& presentation) {
  const Ring& a = presentation.ring();
  require_reduced_modular(a, "generic_freeness_simple");
  GenericFreenessResult out;
  if (a.is_trivial()) {
    out.trivial = trivial_ring_certificate(a);
    return out;
  }
  FreenessWitness w = freeness_rec(presentation);
  if (!verify_freeness(presentation, w)) throw CertificateError("freeness witness does not verify");
  out.free = std::move(w);
  return out;
}

bool verify_freeness(const Matrix& presentation, const FreenessWitness& w) {
  const Ring& a = presentation.ring();
  if (!a.is_modular() || !w.localized.is_modular() || w.f.ring() != a) return false;
  std::uint64_t n = a.small_modulus();
  std::uint64_t f = w.f.integer().get_ui();
  // f is not nilpotent: some prime of n does not divide f.
  std::uint64_t m = n;
  for (std::uint64_t g = std::gcd(m, f); g > 1; g = std::gcd(m, f)) m /= g;
  if (w.localized.small_modulus() != m) return false;
  if (n > 1 && m == 1) return false;
  std::size_t gens = presentation.rows();
  std::uint64_t space = 1;
  for (std::size_t k = 0; k < gens; ++k) {
    space *= m;
    if (space > 4'000'000) throw UnsupportedRing("localized module too large to enumerate");
  }
  auto encode = [&](const std::vector<std::uint64_t>& v) {
    std::uint64_t code = 0;
    for (std::size_t k = gens; k-- > 0;) code = code * m + v[k];
    return code;
  };
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint64_t> v(gens);
    for (std::size_t k = 0; k < gens; ++k) {
      v[k] = code % m;
      code /= m;
    }
    return v;
  };
  // Image of the relations: additive closure of the columns mod m.
  std::vector<std::vector<std::uint64_t>> cols;
  for (std::size_t j = 0; j < presentation.cols(); ++j) {
    std::vector<std::uint64_t> c(gens);
    for (std::size_t k = 0; k < gens; ++k) c[k] = presentation.at(k, j).integer().get_ui() % m;
    cols.push_back(std::move(c));
  }
  std::vector<bool> in_image(space, false);
  std::vector<std::uint64_t> frontier{0};
  in_image[0] = true;
  while (!frontier.empty()) {
    auto v = decode(frontier.back());
    frontier.pop_back();
    for (const auto& c : cols) {
      std::vector<std::uint64_t> s(gens);
      for (std::size_t k = 0; k < gens; ++k) s[k] = (v[k] + c[k]) % m;
      std::uint64_t code = encode(s);
      if (!in_image[code]) {
        in_image[code] = true;
        frontier.push_back(code);
      }
    }
  }
  std::uint64_t image_size = static_cast<std::uint64_t>(std::count(in_image.begin(), in_image.end(), true));
  std::uint64_t quotient = space / image_size;
  std::uint64_t free_size = 1;
  for (std::size_t t = 0; t < w.rank; ++t) free_size *= m;
  if (w.basis.size() != w.rank || free_size != quotient) return false;
  std::vector<std::vector<std::uint64_t>> basis;
  for (const auto& b : w.basis) {
    if (b.size() != gens) return false;
    std::vector<std::uint64_t> v;
    for (const auto& x : b) {
      if (x.ring() != w.localized) return false;
      v.push_back(x.integer().get_ui());
    }
    basis.push_back(std::move(v));
  }
  // The map from the free module of rank `rank` is injective modulo the image, hence bijective.
  std::vector<std::uint64_t> coeff(w.rank, 0);
  for (std::uint64_t c = 1; c < free_size; ++c) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < w.rank; ++i) {
      coeff[i] = t % m;
      t /= m;
    }
    std::vector<std::uint64_t> s(gens, 0);
    for (std::size_t i = 0; i < w.rank; ++i) {
      for (std::size_t k = 0; k < gens; ++k) s[k] = (s[k] + coeff[i] * basis[i][k]) % m;
    }
    if (in_image[encode(s)]) return false;
  }
  return true;
}

}  // namespace zariski
