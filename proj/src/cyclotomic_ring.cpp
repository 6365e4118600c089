#include "qdouble/cyclotomic_ring.hpp"

#include <algorithm>

#include "cyclotomic_basis.hpp"
#include "qdouble/error.hpp"

namespace qdouble {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorCode::Internal, "cyclotomic integer coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

CyclotomicRing::CyclotomicRing(std::int64_t conductor)
    : conductor_(detail::canonical_conductor(conductor)) {
  const auto& b = detail::basis(conductor_);
  dim_ = b.phi;
  residue_ = &b.residue;
}

CyclotomicRing::Vec CyclotomicRing::from_integer(std::int64_t v) const {
  Vec out = zero();
  out[0] = v;
  return out;
}

CyclotomicRing::Vec CyclotomicRing::root(std::int64_t k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  return (*residue_)[static_cast<std::size_t>(k)];
}

CyclotomicRing::Vec CyclotomicRing::embed(const Cyclotomic& x, const mpz_class& scale) const {
  if (conductor_ % x.conductor() != 0) {
    throw Error(ErrorCode::Internal, "conductor " + std::to_string(x.conductor()) +
                                         " does not divide ring conductor " + std::to_string(conductor_));
  }
  const std::int64_t step = conductor_ / x.conductor();
  Vec out = zero();
  const auto& c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const mpq_class v = c[k] * scale;
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
      throw Error(ErrorCode::Internal, "value is not integral at the requested scale");
    }
    add_scaled(out, (*residue_)[k * static_cast<std::size_t>(step)], v.get_num().get_si());
  }
  return out;
}

Cyclotomic CyclotomicRing::to_cyclotomic(const Vec& v, const mpz_class& denominator) const {
  std::vector<std::pair<std::int64_t, mpq_class>> terms;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (v[k] == 0) continue;
    mpq_class q(mpz_class(static_cast<long>(v[k])), denominator);
    q.canonicalize();
    terms.emplace_back(static_cast<std::int64_t>(k), q);
  }
  return Cyclotomic::from_terms(conductor_, terms);
}

void CyclotomicRing::add_to(Vec& acc, const Vec& a) const {
  for (std::size_t k = 0; k < dim_; ++k) {
    if (__builtin_add_overflow(acc[k], a[k], &acc[k])) {
      throw Error(ErrorCode::Internal, "cyclotomic integer coefficient overflow");
    }
  }
}

void CyclotomicRing::add_scaled(Vec& acc, const Vec& a, std::int64_t k) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    acc[i] = narrow(static_cast<__int128>(acc[i]) + static_cast<__int128>(a[i]) * k);
  }
}

void CyclotomicRing::add_product(Vec& acc, const Vec& a, const Vec& b) const {
  // Convolution into exponents [0, 2*dim-1), then reduction of the exponents
  // at or above dim. Exponents >= N wrap to e - N < dim.
  std::vector<__int128> exps(2 * dim_, 0);
  bool any = false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      exps[i + j] += static_cast<__int128>(a[i]) * b[j];
      any = true;
    }
  }
  if (!any) return;
  std::vector<__int128> out(dim_, 0);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = acc[k] + exps[k];
  const auto n = static_cast<std::size_t>(conductor_);
  for (std::size_t e = dim_; e < exps.size(); ++e) {
    if (exps[e] == 0) continue;
    if (e >= n) {
      out[e - n] += exps[e];
      continue;
    }
    const auto& r = (*residue_)[e];
    for (std::size_t k = 0; k < dim_; ++k) {
      if (r[k] != 0) out[k] += exps[e] * r[k];
    }
  }
  for (std::size_t k = 0; k < dim_; ++k) acc[k] = narrow(out[k]);
}

CyclotomicRing::Vec CyclotomicRing::mul(const Vec& a, const Vec& b) const {
  Vec out = zero();
  add_product(out, a, b);
  return out;
}

CyclotomicRing::Vec CyclotomicRing::conj(const Vec& a) const {
  Vec out = zero();
  for (std::size_t k = 0; k < dim_; ++k) {
    if (a[k] == 0) continue;
    const std::int64_t e = k == 0 ? 0 : conductor_ - static_cast<std::int64_t>(k);
    add_scaled(out, (*residue_)[static_cast<std::size_t>(e)], a[k]);
  }
  return out;
}

bool CyclotomicRing::is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<std::int64_t> CyclotomicRing::as_integer(const Vec& v) {
  if (std::any_of(v.begin() + 1, v.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
  return v[0];
}

}  // namespace qdouble
