#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdouble {

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Values are stored in the power basis {zeta_N^k : 0 <= k < phi(N)} reduced
/// modulo the N-th cyclotomic polynomial, at the smallest conductor N whose
/// field contains the value. Conductors are never congruent to 2 mod 4, since
/// Q(zeta_2m) = Q(zeta_m) for odd m. With both conventions fixed the
/// representation is canonical and equality is coefficient equality.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const mpq_class& value);

  /// zeta_n^k
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

  /// Sum of coeff * zeta_n^k over the given terms; exponents may be any
  /// integers and n any positive integer.
  static Cyclotomic from_terms(std::int64_t n,
                               const std::vector<std::pair<std::int64_t, mpq_class>>& terms);

  std::int64_t conductor() const noexcept { return conductor_; }
  /// Dense power-basis coefficients, length phi(conductor()).
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const noexcept { return conductor_ == 1; }
  std::optional<mpq_class> as_rational() const;
  /// Set only when the value is exactly a rational integer >= 0.
  std::optional<std::uint64_t> as_nonneg_integer() const;
  /// lcm of the coefficient denominators.
  mpz_class denominator() const;

  /// zeta -> zeta^-1, i.e. complex conjugation.
  Cyclotomic conj() const;
  /// zeta_N -> zeta_N^k for k coprime to N.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);
  Cyclotomic scaled(const mpq_class& q) const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Floating approximation for export. digits must lie in [6, 18]; the
  /// result is accurate to about 10^(1-digits) relative to the largest term.
  std::complex<long double> to_complex(int digits = 18) const;

  /// Compact JSON record {"conductor":N,"coeffs":[[k,"p/q"],...]} with only
  /// the nonzero coefficients listed.
  std::string serialize() const;
  /// Human-readable form using zN for zeta_N, e.g. "-2*z3^2".
  std::string str() const;

 private:
  Cyclotomic(std::int64_t conductor, std::vector<mpq_class> coeffs);
  void normalize();

  std::int64_t conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

/// Total order on values through their serialized records.
bool serialization_less(const Cyclotomic& a, const Cyclotomic& b);

std::int64_t euler_phi(std::int64_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

}  // namespace qdouble
