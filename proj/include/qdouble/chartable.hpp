#pragma once

#include <cstdint>
#include <vector>

#include "qdouble/cyclotomic.hpp"
#include "qdouble/group.hpp"

namespace qdouble {

struct IrreducibleCharacter {
  std::int64_t degree = 1;
  std::vector<Cyclotomic> values;  // one per class
  int fs_indicator = 1;            // +1 real, 0 complex, -1 quaternionic
};

struct CharacterTable {
  std::size_t group_order = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;      // element -> class
  std::vector<std::size_t> inverse_class;  // class of x^-1
  std::vector<std::size_t> square_class;   // class of x^2
  std::vector<IrreducibleCharacter> irreps;

  std::size_t size() const noexcept { return classes.size(); }
  const Cyclotomic& value(std::size_t irrep, Element x) const {
    return irreps[irrep].values[class_of[x]];
  }
};

/// Full irreducible character table by the Burnside-Dixon class-algebra method:
/// the commuting class-sum matrices are diagonalized simultaneously over F_p
/// with p = 1 mod exp(G), and each character is lifted to Q(zeta_exp(G)) from
/// the eigenvalue multiplicities of its power maps.
///
/// Rows are sorted by degree with the trivial character first; ties are broken
/// by lexicographic comparison of the serialized values in class order.
CharacterTable character_table(const FiniteGroup& g);

/// (1/|G|) * sum_g chi(g^2). Throws NotAnIndicator when the sum falls outside
/// {-1, 0, 1}.
int fs_indicator(const CharacterTable& table, std::size_t irrep);

/// M_A with (M_A)[B][C] = #{(x, y) in A x B : x y = c0} for a fixed c0 in C,
/// one matrix per class A in class order. The central character vectors are
/// the common right eigenvectors: M_A w = w(A) w.
std::vector<std::vector<std::vector<std::int64_t>>> class_sum_matrices(
    const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

/// Smallest prime p with p = 1 mod exponent and p > 2 sqrt(order) * max_class_size.
std::int64_t dixon_prime(std::size_t order, std::size_t exponent, std::size_t max_class_size);

}  // namespace qdouble
