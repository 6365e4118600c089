#include "qdouble/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cyclotomic_basis.hpp"
#include "qdouble/error.hpp"

namespace qdouble {

namespace detail {

namespace {

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Error(ErrorCode::Internal, "cyclotomic basis coefficient overflow");
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_sub_mul(num[i - dn + j], c, den[j]);
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error(ErrorCode::Internal, "inexact cyclotomic polynomial division");
  }
  return q;
}

std::map<std::int64_t, std::vector<std::int64_t>>& poly_cache() {
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  return cache;
}

const std::vector<std::int64_t>& cyclotomic_polynomial_locked(std::int64_t n) {
  auto& cache = poly_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial_locked(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

const CyclotomicBasis& basis(std::int64_t n) {
  static std::map<std::int64_t, std::unique_ptr<CyclotomicBasis>> cache;
  std::lock_guard lock(cache_mutex());
  if (auto it = cache.find(n); it != cache.end()) return *it->second;

  const auto& poly = cyclotomic_polynomial_locked(n);
  auto b = std::make_unique<CyclotomicBasis>();
  b->n = n;
  b->phi = poly.size() - 1;
  b->residue.assign(static_cast<std::size_t>(n), std::vector<std::int64_t>(b->phi, 0));
  std::vector<std::int64_t> cur(b->phi, 0);
  cur[0] = 1;
  if (b->phi == 0) throw Error(ErrorCode::Internal, "degenerate cyclotomic polynomial");
  for (std::int64_t k = 0; k < n; ++k) {
    b->residue[static_cast<std::size_t>(k)] = cur;
    // multiply by x and reduce by the monic Phi_n
    const std::int64_t top = cur.back();
    for (std::size_t i = b->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < b->phi; ++i) cur[i] = checked_sub_mul(cur[i], top, poly[i]);
  }
  return *cache.emplace(n, std::move(b)).first->second;
}

}  // namespace detail

namespace {

using detail::basis;

// Coordinates of Q(zeta_t) inside Q(zeta_n) for t = n/p, p an odd prime
// exactly dividing n. When x lies in the subfield, d = inverse * x[pivots]
// and embedding * d == x.
struct SubfieldSolver {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> embedding;  // rows x cols
  std::vector<std::size_t> pivots;
  std::vector<std::vector<mpq_class>> inverse;  // cols x cols

  std::optional<std::vector<mpq_class>> solve(const std::vector<mpq_class>& x) const {
    std::vector<mpq_class> d(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      mpq_class acc = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        if (inverse[i][j] != 0 && x[pivots[j]] != 0) acc += inverse[i][j] * x[pivots[j]];
      }
      d[i] = acc;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      mpq_class acc = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (embedding[r][c] != 0 && d[c] != 0) acc += embedding[r][c] * d[c];
      }
      if (acc != x[r]) return std::nullopt;
    }
    return d;
  }
};

const SubfieldSolver& subfield_solver(std::int64_t n, std::int64_t t) {
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<SubfieldSolver>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, t}); it != cache.end()) return *it->second;
  }
  const auto& big = basis(n);
  const auto& small = basis(t);
  auto s = std::make_unique<SubfieldSolver>();
  s->rows = big.phi;
  s->cols = small.phi;
  s->embedding.assign(s->rows, std::vector<std::int64_t>(s->cols, 0));
  const std::int64_t step = n / t;
  for (std::size_t j = 0; j < s->cols; ++j) {
    const auto& col = big.residue[static_cast<std::size_t>(static_cast<std::int64_t>(j) * step % n)];
    for (std::size_t r = 0; r < s->rows; ++r) s->embedding[r][j] = col[r];
  }
  // Pick independent rows greedily, then invert the square submatrix.
  std::vector<std::vector<mpq_class>> echelon;
  std::vector<std::size_t> lead;
  for (std::size_t r = 0; r < s->rows && s->pivots.size() < s->cols; ++r) {
    std::vector<mpq_class> v(s->cols);
    for (std::size_t c = 0; c < s->cols; ++c) v[c] = s->embedding[r][c];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (v[lead[e]] == 0) continue;
      const mpq_class f = v[lead[e]];
      for (std::size_t c = 0; c < s->cols; ++c) v[c] -= f * echelon[e][c];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; });
    if (nz == v.end()) continue;
    const std::size_t l = static_cast<std::size_t>(nz - v.begin());
    const mpq_class f = v[l];
    for (auto& q : v) q /= f;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (echelon[e][l] == 0) continue;
      const mpq_class g = echelon[e][l];
      for (std::size_t c = 0; c < s->cols; ++c) echelon[e][c] -= g * v[c];
    }
    echelon.push_back(std::move(v));
    lead.push_back(l);
    s->pivots.push_back(r);
  }
  if (s->pivots.size() != s->cols) throw Error(ErrorCode::Internal, "subfield embedding is not injective");

  const std::size_t m = s->cols;
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(2 * m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = s->embedding[s->pivots[i]][j];
    a[i][m + i] = 1;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const mpq_class f = a[col][col];
    for (auto& q : a[col]) q /= f;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class g = a[r][col];
      for (std::size_t c = 0; c < 2 * m; ++c) a[r][c] -= g * a[col][c];
    }
  }
  // a = [I | M^-1] where M is indexed (pivot row i, subfield coordinate j);
  // solve needs d = M^-1 * x[pivots].
  s->inverse.assign(m, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) s->inverse[i][j] = a[i][m + j];
  }
  std::lock_guard lock(mutex);
  return *cache.emplace(std::pair{n, t}, std::move(s)).first->second;
}

// Reduce a full exponent vector (length n) to power-basis coordinates.
std::vector<mpq_class> reduce_exponents(const detail::CyclotomicBasis& b,
                                        const std::vector<mpq_class>& exps) {
  std::vector<mpq_class> out(b.phi);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    if (k < b.phi) {
      out[k] += exps[k];
      continue;
    }
    const auto& r = b.residue[k];
    for (std::size_t j = 0; j < b.phi; ++j) {
      if (r[j] != 0) out[j] += exps[k] * r[j];
    }
  }
  return out;
}

std::vector<mpq_class> lift(const Cyclotomic& x, std::int64_t target) {
  if (x.conductor() == target) return x.coefficients();
  const auto& b = basis(target);
  const std::int64_t step = target / x.conductor();
  std::vector<mpq_class> exps(static_cast<std::size_t>(target));
  const auto& c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) exps[k * static_cast<std::size_t>(step)] = c[k];
  return reduce_exponents(b, exps);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p : detail::prime_factors(n)) result = result / p * (p - 1);
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  std::lock_guard lock(detail::cache_mutex());
  return detail::cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic() : coeffs_{mpq_class(0)} {}

Cyclotomic::Cyclotomic(long value) : coeffs_{mpq_class(value)} {}

Cyclotomic::Cyclotomic(const mpq_class& value) : coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::int64_t conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "root of unity order must be positive");
  return from_terms(n, {{k, mpq_class(1)}});
}

Cyclotomic Cyclotomic::from_terms(std::int64_t n,
                                  const std::vector<std::pair<std::int64_t, mpq_class>>& terms) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "conductor must be positive");
  const std::int64_t m = detail::canonical_conductor(n);
  std::vector<mpq_class> exps(static_cast<std::size_t>(m));
  for (const auto& [k, raw] : terms) {
    mpq_class c = raw;
    c.canonicalize();
    if (c == 0) continue;
    if (m == n) {
      exps[static_cast<std::size_t>(mod(k, n))] += c;
    } else {
      // zeta_2m = -zeta_m^((m+1)/2) for odd m
      const std::int64_t kk = mod(k, n);
      const std::int64_t e = mod(kk * ((m + 1) / 2), m);
      if (kk % 2 == 0) {
        exps[static_cast<std::size_t>(e)] += c;
      } else {
        exps[static_cast<std::size_t>(e)] -= c;
      }
    }
  }
  Cyclotomic out(m, reduce_exponents(basis(m), exps));
  out.normalize();
  return out;
}

void Cyclotomic::normalize() {
  for (;;) {
    if (conductor_ == 1) return;
    if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& q) { return q == 0; })) {
      conductor_ = 1;
      coeffs_.resize(1);
      return;
    }
    bool reduced = false;
    for (std::int64_t p : detail::prime_factors(conductor_)) {
      const std::int64_t t = conductor_ / p;
      if (t % p == 0) {
        // Phi_n(x) = Phi_t(x^p): the subfield is spanned by exponents divisible by p.
        bool inside = true;
        for (std::size_t k = 0; k < coeffs_.size() && inside; ++k) {
          inside = coeffs_[k] == 0 || k % static_cast<std::size_t>(p) == 0;
        }
        if (!inside) continue;
        std::vector<std::pair<std::int64_t, mpq_class>> terms;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
          if (coeffs_[k] != 0) terms.emplace_back(static_cast<std::int64_t>(k) / p, coeffs_[k]);
        }
        *this = from_terms(t, terms);
        return;
      }
      if (auto d = subfield_solver(conductor_, t).solve(coeffs_)) {
        conductor_ = t;
        coeffs_ = std::move(*d);
        reduced = true;
        break;
      }
    }
    if (!reduced) return;
  }
}

bool Cyclotomic::is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::optional<std::uint64_t> Cyclotomic::as_nonneg_integer() const {
  if (conductor_ != 1) return std::nullopt;
  const mpq_class& q = coeffs_[0];
  if (q.get_den() != 1 || q < 0 || !q.get_num().fits_ulong_p()) return std::nullopt;
  return q.get_num().get_ui();
}

mpz_class Cyclotomic::denominator() const {
  mpz_class d = 1;
  for (const auto& q : coeffs_) d = lcm(d, mpz_class(q.get_den()));
  return d;
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(mod(k, conductor_), conductor_) != 1 && conductor_ > 1) {
    throw Error(ErrorCode::ParameterOutOfRange, "Galois exponent must be coprime to the conductor");
  }
  if (conductor_ == 1) return *this;
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) terms.emplace_back(static_cast<std::int64_t>(j) * k, coeffs_[j]);
  }
  return from_terms(conductor_, terms);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ParameterOutOfRange, "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(mpq_class(1 / coeffs_[0]));
  // x^-1 = (prod of the other conjugates) / norm(x)
  Cyclotomic others(1L);
  for (std::int64_t k = 2; k < conductor_; ++k) {
    if (std::gcd(k, conductor_) == 1) others *= galois(k);
  }
  const auto norm = (*this * others).as_rational();
  if (!norm) throw Error(ErrorCode::Internal, "field norm is not rational");
  return others.scaled(1 / *norm);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (conductor_ == other.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  } else {
    const std::int64_t target = std::lcm(conductor_, other.conductor_);
    auto a = lift(*this, target);
    const auto b = lift(other, target);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    conductor_ = target;
    coeffs_ = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic Cyclotomic::scaled(const mpq_class& factor) const {
  mpq_class q = factor;
  q.canonicalize();
  if (q == 0) return Cyclotomic();
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c *= q;
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor_ == 1) return *this = scaled(other.coeffs_[0]);
  if (conductor_ == 1) return *this = other.scaled(coeffs_[0]);
  const std::int64_t target = std::lcm(conductor_, other.conductor_);
  const auto a = lift(*this, target);
  const auto b = lift(other, target);
  std::vector<mpq_class> exps(static_cast<std::size_t>(target));
  const auto n = static_cast<std::size_t>(target);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) exps[(i + j) % n] += a[i] * b[j];
    }
  }
  conductor_ = target;
  coeffs_ = reduce_exponents(basis(target), exps);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::complex<long double> Cyclotomic::to_complex(int digits) const {
  if (digits < 6 || digits > 18) {
    throw Error(ErrorCode::ParameterOutOfRange, "float precision must lie in [6, 18] digits");
  }
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long double re = 0;
  long double im = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const long double c = static_cast<long double>(coeffs_[k].get_d());
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(conductor_);
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im};
}

std::string Cyclotomic::serialize() const {
  std::ostringstream out;
  out << "{\"conductor\":" << conductor_ << ",\"coeffs\":[";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << ',';
    first = false;
    out << '[' << k << ",\"" << rational_string(coeffs_[k]) << "\"]";
  }
  out << "]}";
  return out.str();
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpq_class c = coeffs_[k];
    if (c == 0) continue;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c == -1) {
      out << '-';
    } else if (c != 1) {
      out << c.get_str() << '*';
    }
    out << 'z' << conductor_;
    if (k > 1) out << '^' << k;
  }
  return first ? "0" : out.str();
}

bool serialization_less(const Cyclotomic& a, const Cyclotomic& b) {
  return a.serialize() < b.serialize();
}

}  // namespace qdouble
