#include "qdouble/modular.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cyclotomic_basis.hpp"
#include "qdouble/cyclotomic_ring.hpp"
#include "qdouble/error.hpp"
#include "qdouble/parallel.hpp"

namespace qdouble {

namespace {

using Vec = CyclotomicRing::Vec;
using RingMatrix = std::vector<std::vector<Vec>>;

std::string irrep_label(std::size_t cls, std::size_t irrep) {
  return "(" + std::to_string(cls) + "," + std::to_string(irrep) + ")";
}

RingMatrix ring_product(const CyclotomicRing& ring, const RingMatrix& a, const RingMatrix& b,
                        std::size_t threads) {
  const std::size_t n = a.size();
  RingMatrix out(n, std::vector<Vec>(n, ring.zero()));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (CyclotomicRing::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!CyclotomicRing::is_zero(b[k][j])) ring.add_product(out[i][j], a[i][k], b[k][j]);
      }
    }
  });
  return out;
}

bool is_scalar_identity(const RingMatrix& m, std::int64_t scalar) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto v = CyclotomicRing::as_integer(m[i][j]);
      if (!v || *v != (i == j ? scalar : 0)) return false;
    }
  }
  return true;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::Internal, "scale factor exceeds int64");
  return z.get_si();
}

}  // namespace

DoubleContext prepare_double(FiniteGroup group, std::size_t threads) {
  DoubleContext ctx{std::move(group), {}, {}, {}};
  const FiniteGroup& g = ctx.group;
  ctx.classes = conjugacy_classes(g);
  ctx.class_of = class_index_map(g, ctx.classes);
  std::vector<std::optional<CentralizerData>> slots(ctx.classes.size());
  parallel_for(ctx.classes.size(), threads, [&](std::size_t c) {
    const auto& cls = ctx.classes[c];
    Subgroup sub = make_subgroup(g, cls.centralizer);
    CharacterTable table = character_table(sub.group);
    // Inverting a left transversal (H = U r C_a) gives a right one (H = U C_a r^-1).
    const Transversal left = left_transversal(g, cls.centralizer);
    std::vector<Element> right;
    right.reserve(left.coset_reps.size());
    for (Element r : left.coset_reps) right.push_back(g.inv(r));
    slots[c] = CentralizerData{std::move(sub), std::move(table), std::move(right)};
  });
  for (auto& slot : slots) ctx.centralizers.push_back(std::move(*slot));
  return ctx;
}

std::vector<std::size_t> ModularData::block_starts() const {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (std::size_t b : blocks) {
    out.push_back(at);
    at += b;
  }
  return out;
}

std::vector<DoubleIrrep> double_irreps(const DoubleContext& ctx) {
  std::vector<DoubleIrrep> out;
  for (std::size_t c = 0; c < ctx.classes.size(); ++c) {
    const auto& data = ctx.centralizers[c];
    const Element a = ctx.classes[c].representative;
    const std::size_t a_class = data.class_of(a);
    for (std::size_t r = 0; r < data.table.irreps.size(); ++r) {
      const auto& chi = data.table.irreps[r];
      DoubleIrrep irrep;
      irrep.class_index = c;
      irrep.centirrep_index = r;
      irrep.qdim = static_cast<std::int64_t>(ctx.classes[c].size()) * chi.degree;
      irrep.t_value = chi.values[a_class].scaled(mpq_class(1, chi.degree));
      irrep.label = irrep_label(c, r);
      out.push_back(std::move(irrep));
    }
  }
  return out;
}

CycloMatrix s_matrix(const DoubleContext& ctx, std::size_t threads) {
  const FiniteGroup& g = ctx.group;
  const std::size_t nclass = ctx.classes.size();
  const CyclotomicRing ring(static_cast<std::int64_t>(g.exponent()));

  // conj chi as ring vectors, per centralizer: [irrep][class]
  std::vector<std::vector<std::vector<Vec>>> conj_chars(nclass);
  std::vector<std::size_t> offset(nclass + 1, 0);
  for (std::size_t c = 0; c < nclass; ++c) {
    const auto& table = ctx.centralizers[c].table;
    for (const auto& chi : table.irreps) {
      std::vector<Vec> row;
      for (const auto& v : chi.values) row.push_back(ring.embed(v.conj()));
      conj_chars[c].push_back(std::move(row));
    }
    offset[c + 1] = offset[c] + table.irreps.size();
  }

  const std::size_t rank = offset[nclass];
  CycloMatrix S(rank, std::vector<Cyclotomic>(rank));
  const mpz_class order(static_cast<unsigned long>(g.order()));

  parallel_for(nclass * nclass, threads, [&](std::size_t pair) {
    const std::size_t ca = pair / nclass;
    const std::size_t cb = pair % nclass;
    const auto& da = ctx.centralizers[ca];
    const auto& db = ctx.centralizers[cb];
    const Element a = ctx.classes[ca].representative;
    const Element b = ctx.classes[cb].representative;
    const std::size_t ka = da.table.size();
    const std::size_t kb = db.table.size();

    // counts[x][y]: admissible g with g b g^-1 in class x of C_a, g^-1 a g in class y of C_b
    std::vector<std::int64_t> counts(ka * kb, 0);
    for (Element ai : da.right_reps) {
      const Element a_conj = g.mul(g.mul(g.inv(ai), a), ai);
      for (Element bj : db.right_reps) {
        const Element bji = g.inv(bj);
        if (g.commutator(g.mul(g.mul(bji, b), bj), a_conj) != FiniteGroup::identity()) continue;
        const Element x = g.mul(ai, bji);
        const Element xi = g.inv(x);
        const std::size_t u = da.class_of(g.mul(g.mul(x, b), xi));
        const std::size_t v = db.class_of(g.mul(g.mul(xi, a), x));
        ++counts[u * kb + v];
      }
    }

    for (std::size_t alpha = 0; alpha < conj_chars[ca].size(); ++alpha) {
      // partial[y] = sum_x counts[x][y] * conj chi_alpha(x)
      std::vector<Vec> partial(kb, ring.zero());
      for (std::size_t u = 0; u < ka; ++u) {
        for (std::size_t v = 0; v < kb; ++v) {
          if (counts[u * kb + v] != 0) ring.add_scaled(partial[v], conj_chars[ca][alpha][u], counts[u * kb + v]);
        }
      }
      for (std::size_t beta = 0; beta < conj_chars[cb].size(); ++beta) {
        Vec acc = ring.zero();
        for (std::size_t v = 0; v < kb; ++v) {
          if (!CyclotomicRing::is_zero(partial[v])) ring.add_product(acc, partial[v], conj_chars[cb][beta][v]);
        }
        S[offset[ca] + alpha][offset[cb] + beta] = ring.to_cyclotomic(acc, order);
      }
    }
  });
  return S;
}

CycloMatrix s_matrix_oracle(const DoubleContext& ctx) {
  const FiniteGroup& g = ctx.group;
  const std::size_t nclass = ctx.classes.size();
  std::vector<std::size_t> offset(nclass + 1, 0);
  for (std::size_t c = 0; c < nclass; ++c) offset[c + 1] = offset[c] + ctx.centralizers[c].table.size();
  const std::size_t rank = offset[nclass];
  CycloMatrix S(rank, std::vector<Cyclotomic>(rank));

  for (std::size_t ca = 0; ca < nclass; ++ca) {
    const auto& da = ctx.centralizers[ca];
    const Element a = ctx.classes[ca].representative;
    for (std::size_t cb = 0; cb < nclass; ++cb) {
      const auto& db = ctx.centralizers[cb];
      const Element b = ctx.classes[cb].representative;
      const mpq_class scale(1, static_cast<unsigned long>(da.subgroup.group.order() * db.subgroup.group.order()));
      for (std::size_t alpha = 0; alpha < da.table.size(); ++alpha) {
        for (std::size_t beta = 0; beta < db.table.size(); ++beta) {
          Cyclotomic sum;
          for (Element x = 0; x < g.order(); ++x) {
            const Element xi = g.inv(x);
            const Element gbg = g.mul(g.mul(x, b), xi);
            if (g.mul(a, gbg) != g.mul(gbg, a)) continue;
            const Element gag = g.mul(g.mul(xi, a), x);
            sum += da.table.irreps[alpha].values[da.class_of(gbg)].conj() *
                   db.table.irreps[beta].values[db.class_of(gag)].conj();
          }
          S[offset[ca] + alpha][offset[cb] + beta] = sum.scaled(scale);
        }
      }
    }
  }
  return S;
}

std::vector<Cyclotomic> t_matrix(const DoubleContext& ctx) {
  std::vector<Cyclotomic> out;
  for (auto& irrep : double_irreps(ctx)) out.push_back(std::move(irrep.t_value));
  return out;
}

ModularData modular_data(const DoubleContext& ctx, const ModularOptions& options) {
  ModularData md;
  md.group_order = ctx.group.order();
  md.irreps = double_irreps(ctx);
  for (const auto& c : ctx.centralizers) md.blocks.push_back(c.table.size());
  md.S = s_matrix(ctx, options.threads);
  for (const auto& irrep : md.irreps) md.T.push_back(irrep.t_value);
  if (options.oracle_check) require_oracle_agreement(md.S, s_matrix_oracle(ctx));
  return md;
}

void require_oracle_agreement(const CycloMatrix& production, const CycloMatrix& oracle) {
  if (production.size() != oracle.size()) {
    throw Error(ErrorCode::OracleMismatch, "S has rank " + std::to_string(production.size()) +
                                               " but the oracle has rank " + std::to_string(oracle.size()));
  }
  for (std::size_t i = 0; i < production.size(); ++i) {
    for (std::size_t j = 0; j < production.size(); ++j) {
      if (!(production[i][j] == oracle[i][j])) {
        throw Error(ErrorCode::OracleMismatch, "S[" + std::to_string(i) + "][" + std::to_string(j) +
                                                   "] = " + production[i][j].str() + " but the oracle gives " +
                                                   oracle[i][j].str());
      }
    }
  }
}

bool ModularReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::vector<std::string> ModularReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [name, ok] : checks) {
    if (!ok) out.push_back(name);
  }
  return out;
}

ModularReport verify_modular(const ModularData& md, std::size_t threads) {
  const std::size_t n = md.S.size();
  for (const auto& row : md.S) {
    if (row.size() != n) throw Error(ErrorCode::ParseError, "S is not square");
  }
  if (md.T.size() != n) throw Error(ErrorCode::ParseError, "T length differs from the rank of S");

  ModularReport report;
  bool symmetric = true;
  std::int64_t conductor = 1;
  mpz_class ds = 1;
  mpz_class dt = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      symmetric = symmetric && md.S[i][j] == md.S[j][i];
      conductor = std::lcm(conductor, md.S[i][j].conductor());
      ds = lcm(ds, md.S[i][j].denominator());
    }
    conductor = std::lcm(conductor, md.T[i].conductor());
    dt = lcm(dt, md.T[i].denominator());
  }
  report.checks.emplace_back("symmetric", symmetric);

  // Work with s = D S and t = D_T T, which have cyclotomic-integer entries.
  const CyclotomicRing ring(conductor);
  const std::int64_t d = to_int64(ds);
  const std::int64_t d_t = to_int64(dt);
  RingMatrix s(n, std::vector<Vec>(n));
  RingMatrix s_adj(n, std::vector<Vec>(n));
  RingMatrix st(n, std::vector<Vec>(n));
  std::vector<Vec> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = ring.embed(md.T[j], dt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s[i][j] = ring.embed(md.S[i][j], ds);
      s_adj[j][i] = ring.conj(s[i][j]);
      st[i][j] = ring.mul(s[i][j], t[j]);
    }
  }

  report.checks.emplace_back("unitary", is_scalar_identity(ring_product(ring, s, s_adj, threads), d * d));

  const RingMatrix s2 = ring_product(ring, s, s, threads);
  std::vector<std::size_t> perm(n, n);
  bool is_perm = true;
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n && is_perm; ++i) {
    for (std::size_t j = 0; j < n && is_perm; ++j) {
      const auto v = CyclotomicRing::as_integer(s2[i][j]);
      if (!v) {
        is_perm = false;
      } else if (*v == d * d) {
        if (perm[i] != n || hit[j]) is_perm = false;
        perm[i] = j;
        hit[j] = true;
      } else if (*v != 0) {
        is_perm = false;
      }
    }
    if (perm[i] == n) is_perm = false;
  }
  report.checks.emplace_back("s2_permutation", is_perm);
  bool involution = is_perm;
  for (std::size_t i = 0; i < n && involution; ++i) involution = perm[perm[i]] == i;
  report.checks.emplace_back("c2_identity", involution);
  if (is_perm) report.charge_conjugation = perm;

  report.checks.emplace_back("s4_identity",
                             is_scalar_identity(ring_product(ring, s2, s2, threads), d * d * d * d));

  // (ST)^3 = S^2  <=>  (s t)^3 = D D_T^3 s^2
  const RingMatrix st3 = ring_product(ring, ring_product(ring, st, st, threads), st, threads);
  bool modular = true;
  const std::int64_t factor = d * d_t * d_t * d_t;
  for (std::size_t i = 0; i < n && modular; ++i) {
    for (std::size_t j = 0; j < n && modular; ++j) {
      Vec diff = st3[i][j];
      ring.add_scaled(diff, s2[i][j], -factor);
      modular = CyclotomicRing::is_zero(diff);
    }
  }
  report.checks.emplace_back("st3_equals_s2", modular);
  return report;
}

std::vector<std::int64_t> quantum_dimensions(const ModularData& md) {
  if (md.S.empty()) return {};
  if (md.S[0][0].is_zero()) throw Error(ErrorCode::NonIntegerDimension, "S_00 is zero");
  const Cyclotomic inv00 = md.S[0][0].inverse();
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < md.S.size(); ++j) {
    const auto mu = (md.S[0][j] * inv00).as_nonneg_integer();
    if (!mu || *mu == 0 || *mu > static_cast<std::uint64_t>(INT64_MAX)) {
      throw Error(ErrorCode::NonIntegerDimension,
                  "quantum dimension " + std::to_string(j) + " is " + (md.S[0][j] * inv00).str());
    }
    out.push_back(static_cast<std::int64_t>(*mu));
  }
  return out;
}

std::int64_t global_dimension(const ModularData& md) {
  std::int64_t total = 0;
  for (std::int64_t mu : quantum_dimensions(md)) total += mu * mu;
  const auto order = static_cast<std::int64_t>(md.group_order);
  if (total != order * order) {
    throw Error(ErrorCode::VerificationFailed, "global dimension " + std::to_string(total) +
                                                   " differs from |H|^2 = " + std::to_string(order * order));
  }
  return total;
}

CycloMatrix character_table_from_modular_data(const ModularData& md) {
  if (md.blocks.empty()) return {};
  const auto starts = md.block_starts();
  const auto qdims = quantum_dimensions(md);
  CycloMatrix out(md.blocks[0], std::vector<Cyclotomic>(md.blocks.size()));
  for (std::size_t r = 0; r < md.blocks[0]; ++r) {
    for (std::size_t c = 0; c < starts.size(); ++c) {
      // the first irrep of each block has trivial centralizer character, so its qdim is |B|
      const mpq_class scale(static_cast<long>(md.group_order), qdims[starts[c]]);
      out[r][c] = md.S[r][starts[c]].conj().scaled(scale);
    }
  }
  return out;
}

}  // namespace qdouble
