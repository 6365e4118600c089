#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/cyclotomic.hpp"
#include "qdouble/error.hpp"
#include "qdouble/group.hpp"

namespace qdouble {

/// Element of the K-fold tensor power of D(H) = F(H) (x) C(H), expanded on the
/// basis delta_g (x) x. A key lists (g_1, x_1, ..., g_K, x_K); zero
/// coefficients are never stored.
template <std::size_t K>
class TensorElement {
 public:
  using Key = std::array<Element, 2 * K>;

  explicit TensorElement(const FiniteGroup& group) : group_(&group) {}

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::map<Key, Cyclotomic>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  void add(const Key& key, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& other) {
    require_same_group(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }

  TensorElement scaled(const Cyclotomic& c) const {
    TensorElement out(*group_);
    for (const auto& [k, v] : terms_) out.add(k, v * c);
    return out;
  }

  /// Factorwise product with (delta_g x)(delta_h y) = [g = x h x^-1] delta_g xy.
  TensorElement operator*(const TensorElement& other) const {
    require_same_group(other);
    const FiniteGroup& g = *group_;
    using Deltas = std::array<Element, K>;
    std::map<Deltas, std::vector<std::pair<Deltas, const Cyclotomic*>>> by_delta;
    for (const auto& [key, c] : other.terms_) {
      Deltas d{};
      Deltas y{};
      for (std::size_t i = 0; i < K; ++i) {
        d[i] = key[2 * i];
        y[i] = key[2 * i + 1];
      }
      by_delta[d].emplace_back(y, &c);
    }
    TensorElement out(g);
    for (const auto& [key, c] : terms_) {
      Deltas need{};
      for (std::size_t i = 0; i < K; ++i) need[i] = g.conjugate(g.inv(key[2 * i + 1]), key[2 * i]);
      auto it = by_delta.find(need);
      if (it == by_delta.end()) continue;
      for (const auto& [y, c2] : it->second) {
        Key k{};
        for (std::size_t i = 0; i < K; ++i) {
          k[2 * i] = key[2 * i];
          k[2 * i + 1] = g.mul(key[2 * i + 1], y[i]);
        }
        out.add(k, c * *c2);
      }
    }
    return out;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_group(const TensorElement& other) const {
    if (group_ != other.group_) {
      throw Error(ErrorCode::GroupMismatch, "operands belong to different groups");
    }
  }

  const FiniteGroup* group_;
  std::map<Key, Cyclotomic> terms_;
};

using DoubleElement = TensorElement<1>;
using DoubleTensor2 = TensorElement<2>;
using DoubleTensor3 = TensorElement<3>;

/// delta_g (x) x
DoubleElement basis_element(const FiniteGroup& g, Element delta, Element x);
/// Every basis element, |H|^2 of them, in (delta, x) lexicographic order.
std::vector<DoubleElement> double_basis(const FiniteGroup& g);
/// sum_g delta_g (x) e
DoubleElement double_unit(const FiniteGroup& g);

template <std::size_t A, std::size_t B>
TensorElement<A + B> tensor(const TensorElement<A>& a, const TensorElement<B>& b) {
  if (&a.group() != &b.group()) throw Error(ErrorCode::GroupMismatch, "operands belong to different groups");
  TensorElement<A + B> out(a.group());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      typename TensorElement<A + B>::Key k{};
      std::copy(ka.begin(), ka.end(), k.begin());
      std::copy(kb.begin(), kb.end(), k.begin() + 2 * A);
      out.add(k, ca * cb);
    }
  }
  return out;
}

DoubleElement double_multiply(const DoubleElement& a, const DoubleElement& b);
DoubleTensor2 double_comultiply(const DoubleElement& a);
Cyclotomic counit(const DoubleElement& a);
DoubleElement antipode(const DoubleElement& a);

/// Swaps the two tensor factors.
DoubleTensor2 flip(const DoubleTensor2& t);
/// (S (x) id) t
DoubleTensor2 antipode_first(const DoubleTensor2& t);
/// m((S (x) id) t) and m((id (x) S) t)
DoubleElement multiply_factors(const DoubleTensor2& t);

/// R = sum_g (delta_g (x) e) (x) (1 (x) g)
DoubleTensor2 r_matrix(const FiniteGroup& g);
/// u = sum S(R2) R1 evaluated from r_matrix; equals sum_g delta_g (x) g^-1.
DoubleElement drinfeld_u(const FiniteGroup& g);
/// sum_g delta_g (x) g, the two-sided inverse of drinfeld_u.
DoubleElement drinfeld_u_inverse(const FiniteGroup& g);

struct HopfReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_pass() const;
};

inline constexpr std::size_t kDefaultHopfMaxOrder = 6;

/// Exhaustive checks over the basis: unit and counit laws, bialgebra
/// compatibility, both antipode axioms, quasi-triangularity, Yang-Baxter,
/// invertibility of R via (S (x) id)R, and S^2 = conjugation by u.
/// Throws ParameterOutOfRange when |H| > max_order (the triple tensor power has
/// dimension |H|^6).
HopfReport check_hopf_axioms(const FiniteGroup& g, std::size_t max_order = kDefaultHopfMaxOrder);

}  // namespace qdouble
