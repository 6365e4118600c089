#include "qdouble/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "cyclotomic_basis.hpp"
#include "qdouble/cyclotomic_ring.hpp"
#include "qdouble/error.hpp"
#include "qdouble/parallel.hpp"

namespace qdouble {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Vec = CyclotomicRing::Vec;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

/// Largest prime p < 2^62 with p = 1 mod l, and an element of order exactly l.
std::pair<u64, u64> prime_with_root(std::int64_t l) {
  const u64 L = static_cast<u64>(l);
  u64 p = ((u64{1} << 62) - 1) / L * L + 1;
  if (p >= (u64{1} << 62)) p -= L;
  while (!is_prime_u64(p)) p -= L;
  const auto primes = detail::prime_factors(l);
  for (u64 a = 2;; ++a) {
    const u64 w = powmod(a, (p - 1) / L, p);
    bool exact = true;
    for (std::int64_t q : primes) exact = exact && powmod(w, L / static_cast<u64>(q), p) != 1;
    if (exact) return {p, w};
  }
}

std::int64_t max_abs(const Vec& v) {
  std::int64_t m = 0;
  for (std::int64_t x : v) m = std::max(m, x < 0 ? -x : x);
  return m;
}

struct Scaled {
  CyclotomicRing ring;
  std::vector<std::vector<Vec>> s;   // D S
  std::vector<std::vector<Vec>> sb;  // conj(D S)
  std::vector<std::int64_t> w;       // Q / s_0m
  __int128 denom;                    // D^2 Q
};

Scaled scale_s(const ModularData& md) {
  const std::size_t n = md.S.size();
  std::int64_t conductor = 1;
  mpz_class d = 1;
  for (const auto& row : md.S) {
    if (row.size() != n) throw Error(ErrorCode::ParseError, "S is not square");
    for (const auto& x : row) {
      conductor = std::lcm(conductor, x.conductor());
      d = lcm(d, x.denominator());
    }
  }
  if (!d.fits_slong_p()) throw Error(ErrorCode::NonIntegerFusion, "S denominators exceed int64");
  Scaled out{CyclotomicRing(conductor), {}, {}, {}, 0};
  out.s.assign(n, std::vector<Vec>(n));
  out.sb.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.s[i][j] = out.ring.embed(md.S[i][j], d);
      out.sb[i][j] = out.ring.conj(out.s[i][j]);
    }
  }
  std::int64_t q = 1;
  for (std::size_t m = 0; m < n; ++m) {
    const auto v = CyclotomicRing::as_integer(out.s[0][m]);
    if (!v || *v == 0) {
      throw Error(ErrorCode::NonIntegerFusion,
                  "S[0][" + std::to_string(m) + "] = " + md.S[0][m].str() + " is not a nonzero rational");
    }
    const __int128 next = static_cast<__int128>(q) / std::gcd(q, std::abs(*v)) * std::abs(*v);
    if (next > INT64_MAX) throw Error(ErrorCode::NonIntegerFusion, "S[0] denominators too large");
    q = static_cast<std::int64_t>(next);
  }
  for (std::size_t m = 0; m < n; ++m) out.w.push_back(q / *CyclotomicRing::as_integer(out.s[0][m]));
  const std::int64_t ds = d.get_si();
  out.denom = static_cast<__int128>(ds) * ds * q;
  return out;
}

std::int64_t to_coefficient(__int128 c, __int128 denom, std::size_t i, std::size_t j, std::size_t k) {
  const std::string where = "N_" + std::to_string(i) + "," + std::to_string(j) + "^" + std::to_string(k);
  if (c % denom != 0) throw Error(ErrorCode::NonIntegerFusion, where + " is not an integer");
  const __int128 v = c / denom;
  if (v < 0) throw Error(ErrorCode::NegativeFusion, where + " = " + std::to_string(static_cast<long long>(v)));
  return static_cast<std::int64_t>(v);
}

// Sum computed directly in Z[zeta]; y[(i*n+j)*n+k] for i <= j.
std::vector<__int128> verlinde_exact(const Scaled& sc, std::size_t threads) {
  const std::size_t n = sc.s.size();
  const auto& ring = sc.ring;
  std::vector<__int128> y(n * n * n, 0);
  std::vector<std::optional<std::string>> bad(n);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      std::vector<Vec> v(n);
      for (std::size_t m = 0; m < n; ++m) {
        v[m] = ring.zero();
        ring.add_scaled(v[m], ring.mul(sc.s[i][m], sc.s[j][m]), sc.w[m]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        Vec acc = ring.zero();
        for (std::size_t m = 0; m < n; ++m) ring.add_product(acc, v[m], sc.sb[k][m]);
        const auto c = CyclotomicRing::as_integer(acc);
        if (!c) {
          throw Error(ErrorCode::NonIntegerFusion, "N_" + std::to_string(i) + "," + std::to_string(j) + "^" +
                                                       std::to_string(k) + " is irrational");
        }
        y[(i * n + j) * n + k] = *c;
      }
    }
  });
  return y;
}

// Same sums through every embedding into F_p; nullopt when the coefficient
// bound does not fit below p/2.
std::optional<std::vector<__int128>> verlinde_modular(const Scaled& sc, std::size_t threads) {
  const std::size_t n = sc.s.size();
  const std::int64_t l = sc.ring.conductor();
  const auto& residue = detail::basis(l).residue;
  const std::size_t phi = sc.ring.dim();

  std::int64_t m_max = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m_max = std::max({m_max, max_abs(sc.s[i][j]), max_abs(sc.sb[i][j])});
  }
  std::int64_t r_max = 1;
  for (std::size_t k = 0; k + 1 < 2 * phi; ++k) r_max = std::max(r_max, max_abs(residue[k % residue.size()]));
  std::int64_t w_max = 1;
  for (std::int64_t w : sc.w) w_max = std::max(w_max, std::abs(w));
  // One product grows power-basis coefficients by at most (2 phi - 1) phi r_max.
  const long double f = static_cast<long double>(2 * phi - 1) * phi * r_max;
  const long double bound = static_cast<long double>(n) * w_max * f * f * std::pow(static_cast<long double>(m_max), 3);

  const auto [p, omega] = prime_with_root(l);
  if (!(bound < static_cast<long double>(p / 2))) return std::nullopt;

  std::vector<u64> omega_pow(static_cast<std::size_t>(l));
  omega_pow[0] = 1;
  for (std::size_t e = 1; e < omega_pow.size(); ++e) omega_pow[e] = mulmod(omega_pow[e - 1], omega, p);
  auto to_field = [p](std::int64_t x) {
    const std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  };

  std::vector<u64> first(n * n * n, 0);
  std::vector<u64> w_img(n);
  for (std::size_t m = 0; m < n; ++m) w_img[m] = to_field(sc.w[m]);
  std::atomic<bool> agree{true};
  bool initial = true;
  for (std::int64_t t = 1; t < l || t == 1; ++t) {
    if (std::gcd(t, l) != 1) continue;
    auto image = [&](const Vec& v) {
      u128 acc = 0;
      for (std::size_t k = 0; k < phi; ++k) {
        if (v[k] == 0) continue;
        acc += static_cast<u128>(to_field(v[k])) * omega_pow[(static_cast<std::size_t>(t) * k) % omega_pow.size()];
        acc %= p;
      }
      return static_cast<u64>(acc);
    };
    std::vector<u64> s_img(n * n);
    std::vector<u64> sb_img(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s_img[i * n + j] = image(sc.s[i][j]);
        sb_img[i * n + j] = image(sc.sb[i][j]);
      }
    }
    parallel_for(n, threads, [&](std::size_t i) {
      std::vector<u64> v(n);
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) v[m] = mulmod(mulmod(s_img[i * n + m], s_img[j * n + m], p), w_img[m], p);
        for (std::size_t k = 0; k < n; ++k) {
          u128 acc = 0;
          const u64* row = &sb_img[k * n];
          for (std::size_t m = 0; m < n; ++m) {
            acc += static_cast<u128>(v[m]) * row[m];
            if ((m & 15) == 15) acc %= p;
          }
          const u64 r = static_cast<u64>(acc % p);
          u64& slot = first[(i * n + j) * n + k];
          if (initial) {
            slot = r;
          } else if (slot != r) {
            agree = false;
          }
        }
      }
    });
    initial = false;
    if (!agree) break;
  }

  std::vector<__int128> y(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const u64 r = first[(i * n + j) * n + k];
        y[(i * n + j) * n + k] = r > p / 2 ? static_cast<__int128>(r) - static_cast<__int128>(p) : r;
      }
    }
  }
  if (!agree) {
    // Some entry is not a rational integer; locate it exactly.
    return verlinde_exact(sc, threads);
  }
  return y;
}

}  // namespace

FusionRing::FusionRing(std::size_t rank, std::vector<std::int64_t> coefficients)
    : rank_(rank), n_(std::move(coefficients)) {
  if (n_.size() != rank_ * rank_ * rank_) throw Error(ErrorCode::Internal, "fusion tensor has the wrong size");
}

IntMatrix FusionRing::fusion_matrix(std::size_t i) const {
  IntMatrix out(rank_, std::vector<std::int64_t>(rank_));
  for (std::size_t j = 0; j < rank_; ++j) {
    for (std::size_t k = 0; k < rank_; ++k) out[j][k] = (*this)(i, j, k);
  }
  return out;
}

FusionRing verlinde(const ModularData& md, std::size_t threads) {
  const std::size_t n = md.S.size();
  if (n == 0) return FusionRing(0, {});
  const Scaled sc = scale_s(md);
  auto y = verlinde_modular(sc, threads);
  if (!y) y = verlinde_exact(sc, threads);
  std::vector<std::int64_t> coeffs(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t v = to_coefficient((*y)[(i * n + j) * n + k], sc.denom, i, j, k);
        coeffs[(i * n + j) * n + k] = v;
        coeffs[(j * n + i) * n + k] = v;
      }
    }
  }
  return FusionRing(n, std::move(coeffs));
}

bool FusionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

FusionReport check_fusion_ring(const FusionRing& ring, const std::vector<std::int64_t>& qdims,
                               const std::vector<std::size_t>& charge_conjugation) {
  const std::size_t n = ring.rank();
  bool unit = true;
  bool commutative = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      unit = unit && ring(0, i, j) == (i == j ? 1 : 0);
      for (std::size_t k = 0; k < n; ++k) commutative = commutative && ring(i, j, k) == ring(j, i, k);
    }
  }

  // sparse rows: nz[i][j] = {(k, N_ij^k)}
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>> nz(
      n, std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ring(i, j, k) != 0) nz[i][j].emplace_back(k, ring(i, j, k));
      }
    }
  }
  // (i j) l = sum_m N_ij^m (m l)  versus  i (j l) = sum_m N_jl^m (i m)
  bool associative = true;
  std::vector<std::int64_t> lhs(n);
  std::vector<std::int64_t> rhs(n);
  for (std::size_t i = 0; i < n && associative; ++i) {
    for (std::size_t j = 0; j < n && associative; ++j) {
      for (std::size_t l = 0; l < n && associative; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [m, a] : nz[i][j]) {
          for (const auto& [k, b] : nz[m][l]) lhs[k] += a * b;
        }
        for (const auto& [m, a] : nz[j][l]) {
          for (const auto& [k, b] : nz[i][m]) rhs[k] += a * b;
        }
        associative = lhs == rhs;
      }
    }
  }

  bool conjugation = charge_conjugation.size() == n;
  for (std::size_t i = 0; i < n && conjugation; ++i) {
    const std::size_t ci = charge_conjugation[i];
    for (std::size_t j = 0; j < n && conjugation; ++j) {
      conjugation = ring(i, j, 0) == (j == ci ? 1 : 0);
      for (std::size_t k = 0; k < n && conjugation; ++k) conjugation = ring(ci, j, k) == ring(i, k, j);
    }
  }

  bool perron = qdims.size() == n;
  for (std::size_t i = 0; i < n && perron; ++i) {
    for (std::size_t j = 0; j < n && perron; ++j) {
      std::int64_t sum = 0;
      for (const auto& [k, v] : nz[i][j]) sum += v * qdims[k];
      perron = sum == qdims[i] * qdims[j];
    }
  }

  FusionReport report;
  report.checks = {
      {"unit", unit},
      {"commutative", commutative},
      {"associative", associative},
      {"conjugation", conjugation},
      {"perron_eigenvector", perron},
  };
  return report;
}

FusionGraph fusion_graph(const FusionRing& ring, std::size_t i) {
  if (i >= ring.rank()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "irrep " + std::to_string(i) + " out of range for rank " + std::to_string(ring.rank()));
  }
  FusionGraph g;
  g.base_irrep = i;
  g.adjacency = ring.fusion_matrix(i);
  g.components = connected_components(g.adjacency);
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const IntMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency[u][v] == 0) continue;
      const std::size_t a = find(u);
      const std::size_t b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

GraphTemplate from_edges(std::string name, std::size_t n,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphTemplate t{std::move(name), IntMatrix(n, std::vector<std::int64_t>(n, 0))};
  for (const auto& [a, b] : edges) {
    t.adjacency[a][b] = 1;
    t.adjacency[b][a] = 1;
  }
  return t;
}

bool extend(const IntMatrix& g, const IntMatrix& t, std::vector<std::size_t>& map, std::vector<bool>& used,
            std::size_t at) {
  const std::size_t n = g.size();
  if (at == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = g[at][at] == t[cand][cand];
    for (std::size_t prev = 0; prev < at && ok; ++prev) {
      ok = g[at][prev] == t[cand][map[prev]] && g[prev][at] == t[map[prev]][cand];
    }
    if (!ok) continue;
    map[at] = cand;
    used[cand] = true;
    if (extend(g, t, map, used, at + 1)) return true;
    used[cand] = false;
  }
  return false;
}

std::vector<std::int64_t> degree_profile(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  for (const auto& row : m) out.push_back(std::accumulate(row.begin(), row.end(), std::int64_t{0}));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GraphTemplate affine_e6() {
  return from_edges("affine_e6", 7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

GraphTemplate cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::ParameterOutOfRange, "a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges("cycle:" + std::to_string(n), n, edges);
}

GraphTemplate path_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::ParameterOutOfRange, "a path needs at least 1 vertex");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edges("path:" + std::to_string(n), n, edges);
}

IntMatrix induced_subgraph(const IntMatrix& adjacency, const std::vector<std::size_t>& vertices) {
  IntMatrix out(vertices.size(), std::vector<std::int64_t>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = 0; b < vertices.size(); ++b) out[a][b] = adjacency[vertices[a]][vertices[b]];
  }
  return out;
}

bool graph_isomorphic_to(const IntMatrix& graph, const GraphTemplate& tmpl) {
  if (graph.size() != tmpl.adjacency.size()) return false;
  if (degree_profile(graph) != degree_profile(tmpl.adjacency)) return false;
  std::vector<std::size_t> map(graph.size());
  std::vector<bool> used(graph.size(), false);
  return extend(graph, tmpl.adjacency, map, used, 0);
}

}  // namespace qdouble
