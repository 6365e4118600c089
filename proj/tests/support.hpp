#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qdouble/catalog.hpp"
#include "qdouble/chartable.hpp"
#include "qdouble/cyclotomic.hpp"
#include "qdouble/fusion.hpp"
#include "qdouble/modular.hpp"

namespace testing {

using qdouble::Cyclotomic;

inline Cyclotomic zeta(std::int64_t n, std::int64_t k) { return Cyclotomic::root_of_unity(n, k); }

/// a + b j with j = exp(2 pi i / 3).
inline Cyclotomic in_j(std::int64_t a, std::int64_t b) {
  return Cyclotomic(static_cast<long>(a)) + zeta(3, 1) * Cyclotomic(static_cast<long>(b));
}

/// 1 + i sqrt 3 and 1 - i sqrt 3.
inline Cyclotomic phi() { return zeta(3, 2) * Cyclotomic(-2); }
inline Cyclotomic psi() { return zeta(3, 1) * Cyclotomic(-2); }

/// Representatives of the seven SL(2,3) classes in the reference numbering,
/// entries mod 3.
inline const std::vector<qdouble::Matrix2> kReferenceClassReps = {
    {1, 0, 0, 1}, {2, 0, 0, 2}, {0, 1, 2, 2}, {2, 2, 1, 0}, {0, 1, 2, 0}, {0, 1, 2, 1}, {1, 2, 1, 0},
};

/// Our class index for each reference class.
inline std::vector<std::size_t> reference_class_map(const qdouble::DoubleContext& ctx) {
  std::vector<std::size_t> out;
  for (const auto& m : kReferenceClassReps) {
    out.push_back(ctx.class_of[qdouble::find_matrix(ctx.group, 3, m)]);
  }
  return out;
}

/// SL(2,3) character table in the reference class numbering; entries a + b j.
struct RefRow {
  int fs;
  std::vector<std::pair<int, int>> values;
};
inline const std::vector<RefRow> kReferenceTable = {
    {1, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}},
    {0, {{1, 0}, {1, 0}, {-1, -1}, {0, 1}, {1, 0}, {0, 1}, {-1, -1}}},
    {0, {{1, 0}, {1, 0}, {0, 1}, {-1, -1}, {1, 0}, {-1, -1}, {0, 1}}},
    {-1, {{2, 0}, {-2, 0}, {-1, 0}, {-1, 0}, {0, 0}, {1, 0}, {1, 0}}},
    {0, {{2, 0}, {-2, 0}, {1, 1}, {0, -1}, {0, 0}, {0, 1}, {-1, -1}}},
    {0, {{2, 0}, {-2, 0}, {0, -1}, {1, 1}, {0, 0}, {-1, -1}, {0, 1}}},
    {1, {{3, 0}, {3, 0}, {0, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}}},
};


/// True when `t`, a table of the SL(2,3) in `ctx`, has the reference rows up
/// to a row permutation, with indicators.
inline bool table_matches_reference(const qdouble::CharacterTable& t, const qdouble::DoubleContext& ctx) {
  if (t.size() != kReferenceTable.size()) return false;
  const auto map = reference_class_map(ctx);
  std::vector<bool> used(t.size(), false);
  for (const auto& ref : kReferenceTable) {
    bool found = false;
    for (std::size_t r = 0; r < t.size() && !found; ++r) {
      bool same = !used[r] && t.irreps[r].fs_indicator == ref.fs;
      for (std::size_t c = 0; same && c < ref.values.size(); ++c) {
        same = t.irreps[r].values[map[c]] == in_j(ref.values[c].first, ref.values[c].second);
      }
      if (same) used[r] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

struct Computed {
  qdouble::DoubleContext context;
  qdouble::ModularData modular;
};

inline Computed compute(const std::string& spec, std::size_t threads = 1) {
  auto ctx = qdouble::prepare_double(qdouble::parse_group_spec(spec), threads);
  qdouble::ModularOptions options;
  options.threads = threads;
  auto md = qdouble::modular_data(ctx, options);
  return {std::move(ctx), std::move(md)};
}

/// The binary tetrahedral data, computed once per process.
inline const Computed& tetrahedral() {
  static const Computed c = compute("binary_tetrahedral", 2);
  return c;
}

inline bool check_passed(const std::vector<std::pair<std::string, bool>>& checks, const std::string& name) {
  for (const auto& [n, ok] : checks) {
    if (n == name) return ok;
  }
  return false;
}

}  // namespace testing
