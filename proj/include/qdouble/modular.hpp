#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/chartable.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/group.hpp"

namespace qdouble {

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

/// Centralizer C_a of a class representative, with its own character table
/// and a right transversal {r_i}: H is the disjoint union of the cosets C_a r_i.
struct CentralizerData {
  Subgroup subgroup;
  CharacterTable table;
  std::vector<Element> right_reps;

  /// Class (in table) of a parent-group element lying in C_a.
  std::size_t class_of(Element parent) const {
    return table.class_of[static_cast<std::size_t>(subgroup.from_parent[parent])];
  }
};

/// Everything about H the modular data is assembled from.
struct DoubleContext {
  FiniteGroup group;
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;
  std::vector<CentralizerData> centralizers;  // one per class, same order
};

/// Classes, centralizers, centralizer character tables and transversals.
/// Centralizer tables are independent and computed on up to `threads` workers.
DoubleContext prepare_double(FiniteGroup group, std::size_t threads = 1);

/// Irrep (A, alpha) of D(H): a class of H and an irrep of the centralizer of
/// its representative.
struct DoubleIrrep {
  std::size_t class_index = 0;
  std::size_t centirrep_index = 0;
  std::int64_t qdim = 1;  // |A| * deg(alpha)
  Cyclotomic t_value;     // chi_alpha(a) / chi_alpha(e)
  std::string label;
};

struct ModularData {
  std::size_t group_order = 1;
  std::vector<DoubleIrrep> irreps;
  std::vector<std::size_t> blocks;  // irreps per class, in class order
  CycloMatrix S;
  std::vector<Cyclotomic> T;

  std::size_t rank() const noexcept { return S.size(); }
  /// First irrep index of each block.
  std::vector<std::size_t> block_starts() const;
};

/// Ordered by class, then by centralizer character-table row; the vacuum
/// (identity class, trivial character) is index 0.
std::vector<DoubleIrrep> double_irreps(const DoubleContext& ctx);

/// S by the coset-transversal sum:
///   S = 1/|H| sum_{i,j} conj chi_alpha(g b g^-1) conj chi_beta(g^-1 a g),
/// over g = a_i b_j^-1 with [b_j^-1 b b_j, a_i^-1 a a_i] = e, where {a_i} and
/// {b_j} are right transversals of C_a and C_b. Work is split over class
/// pairs; the result does not depend on `threads`.
CycloMatrix s_matrix(const DoubleContext& ctx, std::size_t threads = 1);

/// S by the centralizer sum over the whole group:
///   S = 1/(|C_a||C_b|) sum_{g : [a, g b g^-1] = e} conj chi_alpha(g b g^-1) conj chi_beta(g^-1 a g).
/// Evaluated entry by entry in field arithmetic; used to validate s_matrix.
CycloMatrix s_matrix_oracle(const DoubleContext& ctx);

/// Diagonal of T: chi_alpha(a) / chi_alpha(e), central charge 0.
std::vector<Cyclotomic> t_matrix(const DoubleContext& ctx);

struct ModularOptions {
  std::size_t threads = 1;
  bool oracle_check = false;  // compare against s_matrix_oracle, throw OracleMismatch
};

ModularData modular_data(const DoubleContext& ctx, const ModularOptions& options = {});

/// Throws OracleMismatch naming the first differing entry.
void require_oracle_agreement(const CycloMatrix& production, const CycloMatrix& oracle);

struct ModularReport {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::size_t> charge_conjugation;  // empty unless S^2 is a permutation

  bool all_pass() const;
  std::vector<std::string> failures() const;
};

/// Exact checks: S symmetric, S unitary, S^2 = C a permutation, C^2 = 1,
/// S^4 = 1, (ST)^3 = S^2. Failures are report entries, never exceptions.
ModularReport verify_modular(const ModularData& md, std::size_t threads = 1);

/// S_0j / S_00; throws NonIntegerDimension unless every value is a positive integer.
std::vector<std::int64_t> quantum_dimensions(const ModularData& md);
/// sum of squared quantum dimensions; throws VerificationFailed unless it equals |H|^2.
std::int64_t global_dimension(const ModularData& md);

/// Character table of H read off S: entry (alpha, B) is
/// conj(S[(e, alpha)][(B, 1)]) * |H| / |B|.
CycloMatrix character_table_from_modular_data(const ModularData& md);

}  // namespace qdouble
