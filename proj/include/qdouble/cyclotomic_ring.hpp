#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "qdouble/cyclotomic.hpp"

namespace qdouble {

/// The ring of cyclotomic integers Z[zeta_N] at one fixed conductor, with
/// machine-integer coefficients. This is the arithmetic kernel behind the
/// large exact matrix products (S-matrix assembly, modular relations,
/// Verlinde sums). Every operation is exact; a coefficient that would leave
/// the int64 range raises an error instead of wrapping.
class CyclotomicRing {
 public:
  using Vec = std::vector<std::int64_t>;

  explicit CyclotomicRing(std::int64_t conductor);

  std::int64_t conductor() const noexcept { return conductor_; }
  std::size_t dim() const noexcept { return dim_; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec from_integer(std::int64_t v) const;
  /// scale * x as a ring element. x's conductor must divide conductor() and
  /// scale * x must have integral coefficients.
  Vec embed(const Cyclotomic& x, const mpz_class& scale = 1) const;
  /// v / denominator as a field element.
  Cyclotomic to_cyclotomic(const Vec& v, const mpz_class& denominator = 1) const;

  /// zeta^k
  Vec root(std::int64_t k) const;

  void add_to(Vec& acc, const Vec& a) const;
  void add_scaled(Vec& acc, const Vec& a, std::int64_t k) const;
  /// acc += a * b
  void add_product(Vec& acc, const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec conj(const Vec& a) const;

  static bool is_zero(const Vec& v);
  /// Set when v is a rational integer.
  static std::optional<std::int64_t> as_integer(const Vec& v);

 private:
  std::int64_t conductor_;
  std::size_t dim_;
  const std::vector<std::vector<std::int64_t>>* residue_;
};

}  // namespace qdouble
