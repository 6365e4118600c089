#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/modular.hpp"

namespace qdouble {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::size_t rank, std::vector<std::int64_t> coefficients);

  std::size_t rank() const noexcept { return rank_; }
  /// N_ij^k
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return n_[(i * rank_ + j) * rank_ + k];
  }
  const std::vector<std::int64_t>& coefficients() const noexcept { return n_; }
  /// (N_i)[j][k] = N_ij^k
  IntMatrix fusion_matrix(std::size_t i) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> n_;
};

/// N_ij^k = sum_m S_im S_jm conj(S_km) / S_0m, exactly.
///
/// The sum is evaluated in F_p under every embedding Z[zeta_L] -> F_p
/// (p = 1 mod L, about 62 bits). An a-priori bound on the power-basis
/// coefficients of the scaled sum keeps it below p/2, so agreement of all
/// embeddings proves the value is that rational integer. When the bound does
/// not fit the sum is formed in exact cyclotomic-integer arithmetic instead.
/// Throws NonIntegerFusion or NegativeFusion; S_0m must be nonzero rationals.
FusionRing verlinde(const ModularData& md, std::size_t threads = 1);

struct FusionReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_pass() const;
};

/// Unit, commutativity, associativity (N_i N_j = sum_m N_ij^m N_m for the
/// left-multiplication matrices), the conjugation rules N_ij^0 = [j = C(i)]
/// and N_C(i) = N_i^T, and the Perron relation sum_k N_ij^k mu_k = mu_i mu_j.
FusionReport check_fusion_ring(const FusionRing& ring, const std::vector<std::int64_t>& qdims,
                               const std::vector<std::size_t>& charge_conjugation);

struct FusionGraph {
  std::size_t base_irrep = 0;
  IntMatrix adjacency;  // = N_base
  std::vector<std::vector<std::size_t>> components;
};

FusionGraph fusion_graph(const FusionRing& ring, std::size_t i);

/// Undirected reachability on nonzero entries. Components are listed by
/// smallest vertex, each sorted ascending.
std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& adjacency);

struct GraphTemplate {
  std::string name;
  IntMatrix adjacency;  // symmetric 0/1, no loops
};

/// Center with three legs of length two.
GraphTemplate affine_e6();
GraphTemplate cycle_graph(std::size_t n);
GraphTemplate path_graph(std::size_t n);

/// Adjacency of the subgraph induced on `vertices`.
IntMatrix induced_subgraph(const IntMatrix& adjacency, const std::vector<std::size_t>& vertices);

/// Exact isomorphism by backtracking; intended for graphs of at most a dozen
/// vertices. Multiplicities and loops must match exactly.
bool graph_isomorphic_to(const IntMatrix& graph, const GraphTemplate& tmpl);

}  // namespace qdouble
