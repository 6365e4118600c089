#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qdouble {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 2000;

/// A finite group given by its full multiplication table. Elements are the
/// indices 0..order-1 and index 0 is always the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<Element> generators,
              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// x a x^-1
  Element conjugate(Element x, Element a) const noexcept { return mul(mul(x, a), inv(x)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element pow(Element a, std::int64_t k) const;
  std::size_t element_order(Element a) const noexcept { return element_order_[a]; }
  std::size_t exponent() const noexcept { return exponent_; }

  std::span<const Element> generators() const noexcept { return generators_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element a) const;

  /// Exhaustive O(n^3) check of associativity, identity and inverse laws, plus
  /// generation by the stored generators.
  bool check_axioms() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::size_t exponent_ = 1;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
};

using Permutation = std::vector<std::uint32_t>;

/// 2x2 matrix over F_p, row major.
using Matrix2 = std::array<std::int64_t, 4>;

FiniteGroup group_from_permutations(const std::vector<Permutation>& gens,
                                    std::size_t max_order = kDefaultMaxOrder);

FiniteGroup group_from_matrices(std::int64_t p, const std::vector<Matrix2>& gens,
                                std::size_t max_order = kDefaultMaxOrder);

/// Finds the index of a matrix in a group built by group_from_matrices, using
/// its labels. Returns order() when absent.
Element find_matrix(const FiniteGroup& g, std::int64_t p, const Matrix2& m);

struct ConjugacyClass {
  Element representative = 0;
  std::vector<Element> members;     // sorted
  std::vector<Element> centralizer;  // sorted, centralizer of representative
  std::size_t element_order = 1;

  std::size_t size() const noexcept { return members.size(); }
};

/// Classes sorted by (element order, class size, minimal member); the
/// representative is the minimal member, so the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// element -> index into the class list.
std::vector<std::size_t> class_index_map(const FiniteGroup& g,
                                         const std::vector<ConjugacyClass>& classes);

std::vector<Element> centralizer(const FiniteGroup& g, Element a);

struct Transversal {
  std::vector<Element> subgroup;
  std::vector<Element> coset_reps;
};

/// Greedy left transversal: each element factors uniquely as rep * h.
Transversal left_transversal(const FiniteGroup& g, const std::vector<Element>& subgroup);

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& members);

/// A subgroup re-indexed as a group in its own right. The members are kept
/// sorted, so local index i corresponds to parent element to_parent[i] and the
/// identity stays at index 0.
struct Subgroup {
  FiniteGroup group;
  std::vector<Element> to_parent;
  std::vector<std::int64_t> from_parent;  // -1 for elements outside
};

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members);

}  // namespace qdouble
