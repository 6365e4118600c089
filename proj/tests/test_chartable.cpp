#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "qdouble/catalog.hpp"
#include "qdouble/chartable.hpp"
#include "qdouble/modular.hpp"
#include "support.hpp"

using namespace qdouble;
using testing::in_j;
using testing::zeta;

namespace {

void check_table_invariants(const FiniteGroup& g) {
  const auto t = character_table(g);
  REQUIRE(t.irreps.size() == t.size());
  std::int64_t sum_sq = 0;
  for (std::size_t c = 0; c < t.size(); ++c) CHECK(t.irreps[0].values[c] == Cyclotomic(1));
  for (const auto& chi : t.irreps) {
    CHECK(chi.values[0] == Cyclotomic(static_cast<long>(chi.degree)));
    sum_sq += chi.degree * chi.degree;
  }
  CHECK(sum_sq == static_cast<std::int64_t>(g.order()));
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t s = 0; s < t.size(); ++s) {
      Cyclotomic acc;
      for (std::size_t c = 0; c < t.size(); ++c) {
        acc += Cyclotomic(static_cast<long>(t.classes[c].size())) * t.irreps[r].values[c] *
               t.irreps[s].values[c].conj();
      }
      CHECK(acc == Cyclotomic(r == s ? static_cast<long>(g.order()) : 0));
    }
  }
  for (std::size_t r = 1; r < t.size(); ++r) {
    CHECK(t.irreps[r - 1].degree <= t.irreps[r].degree);
  }
}

}  // namespace

TEST_SUITE("chartable") {

TEST_CASE("binary tetrahedral table equals the reference table") {
  const auto& ctx = testing::tetrahedral().context;
  const auto t = character_table(ctx.group);
  const auto map = testing::reference_class_map(ctx);
  REQUIRE(t.size() == 7);
  std::vector<std::int64_t> degrees;
  for (const auto& chi : t.irreps) degrees.push_back(chi.degree);
  CHECK(degrees == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});

  CHECK(testing::table_matches_reference(t, ctx));
  auto altered = t;
  altered.irreps[1].values[map[2]] = altered.irreps[1].values[map[2]].conj();
  CHECK_FALSE(testing::table_matches_reference(altered, ctx));
  // The natural representation is row 3 (degree 2, quaternionic).
  CHECK(t.irreps[3].fs_indicator == -1);
  CHECK(t.irreps[6].values[map[4]] == Cyclotomic(-1));
}

TEST_CASE("cyclic groups have the discrete Fourier table") {
  for (std::int64_t n : {1, 2, 5, 6, 12}) {
    const auto g = build("cyclic", n);
    const auto t = character_table(g);
    REQUIRE(t.size() == static_cast<std::size_t>(n));
    // Every row is k -> zeta_n^(j k) for a generator; collect them as value tuples.
    const Element a = n == 1 ? FiniteGroup::identity() : g.generators()[0];
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& chi : t.irreps) {
      std::vector<Cyclotomic> row;
      for (std::int64_t k = 0; k < n; ++k) row.push_back(t.value(&chi - t.irreps.data(), g.pow(a, k)));
      rows.push_back(row);
    }
    for (std::int64_t j = 0; j < n; ++j) {
      std::vector<Cyclotomic> want;
      for (std::int64_t k = 0; k < n; ++k) want.push_back(zeta(n, j * k));
      CHECK(std::count(rows.begin(), rows.end(), want) == 1);
    }
  }
}

TEST_CASE("S3 table") {
  const auto g = build("symmetric", 3);
  const auto t = character_table(g);
  REQUIRE(t.size() == 3);
  CHECK(t.irreps[2].degree == 2);
  std::map<std::size_t, Cyclotomic> by_order;
  for (std::size_t c = 0; c < 3; ++c) by_order.emplace(t.classes[c].element_order, t.irreps[2].values[c]);
  CHECK(by_order.at(1) == Cyclotomic(2));
  CHECK(by_order.at(2) == Cyclotomic(0));
  CHECK(by_order.at(3) == Cyclotomic(-1));
}

TEST_CASE("Frobenius-Schur indicators") {
  const auto t = character_table(testing::tetrahedral().context.group);
  std::vector<int> fs;
  for (std::size_t r = 0; r < t.size(); ++r) {
    CHECK(fs_indicator(t, r) == t.irreps[r].fs_indicator);
    fs.push_back(t.irreps[r].fs_indicator);
  }
  CHECK(std::count(fs.begin(), fs.end(), 1) == 2);
  CHECK(std::count(fs.begin(), fs.end(), -1) == 1);
  CHECK(std::count(fs.begin(), fs.end(), 0) == 4);
  const auto z3 = character_table(build("cyclic", 3));
  CHECK(z3.irreps[0].fs_indicator == 1);
  CHECK(z3.irreps[1].fs_indicator == 0);
  CHECK(z3.irreps[2].fs_indicator == 0);
  const auto q8 = character_table(build("binary_dihedral", 2));
  CHECK(q8.irreps[4].fs_indicator == -1);
}

TEST_CASE("class sum matrices") {
  const auto s3 = build("symmetric", 3);
  const auto classes = conjugacy_classes(s3);
  const auto m = class_sum_matrices(s3, classes);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(m[0][i][j] == (i == j ? 1 : 0));
  }
  std::size_t transpositions = 0;
  while (classes[transpositions].element_order != 2) ++transpositions;
  // Columns of M_A sum to |A|: each x in A pairs with exactly one y.
  for (std::size_t c = 0; c < 3; ++c) {
    std::int64_t sum = 0;
    for (std::size_t b = 0; b < 3; ++b) sum += m[transpositions][b][c];
    CHECK(sum == 3);
  }
  const auto z2 = build("cyclic", 2);
  const auto mz = class_sum_matrices(z2, conjugacy_classes(z2));
  CHECK(mz[1] == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
  std::vector<std::vector<std::int64_t>> sq(2, std::vector<std::int64_t>(2, 0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) sq[i][j] += mz[1][i][k] * mz[1][k][j];
    }
  }
  CHECK(sq == mz[0]);
}

TEST_CASE("Dixon prime") {
  const auto p = dixon_prime(24, 12, 6);
  CHECK(p % 12 == 1);
  CHECK(p > 2 * 5 * 6);
}

TEST_CASE("table invariants across the catalog") {
  for (const char* spec : {"cyclic:1", "cyclic:7", "dihedral:5", "dihedral:8", "binary_dihedral:3", "symmetric:4",
                           "symmetric:5", "alternating:4", "alternating:5", "binary_octahedral",
                           "binary_icosahedral", "sl2:5"}) {
    CAPTURE(spec);
    check_table_invariants(parse_group_spec(spec));
  }
}

}  // TEST_SUITE
