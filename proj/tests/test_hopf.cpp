#include <set>
#include <utility>

#include "doctest.h"
#include "qdouble/catalog.hpp"
#include "qdouble/error.hpp"
#include "qdouble/hopf.hpp"

using namespace qdouble;

TEST_SUITE("hopf") {

TEST_CASE("basis and unit") {
  const auto g = build("symmetric", 3);
  const auto basis = double_basis(g);
  CHECK(basis.size() == 36);
  const auto unit = double_unit(g);
  CHECK(unit.size() == 6);
  for (const auto& b : basis) {
    CHECK(double_multiply(unit, b) == b);
    CHECK(double_multiply(b, unit) == b);
  }
}

TEST_CASE("multiplication rule") {
  const auto z2 = build("cyclic", 2);
  const Element x = 1;
  CHECK(double_multiply(basis_element(z2, x, x), basis_element(z2, x, x)) == basis_element(z2, x, 0));

  const auto g = build("symmetric", 3);
  for (Element a = 0; a < 6; ++a) {
    for (Element x1 = 0; x1 < 6; ++x1) {
      for (Element b = 0; b < 6; ++b) {
        const auto p = double_multiply(basis_element(g, a, x1), basis_element(g, b, 0));
        CHECK((p.size() == 0) == (a != g.conjugate(x1, b)));
      }
    }
  }
}

TEST_CASE("zero coefficients are dropped") {
  const auto g = build("cyclic", 3);
  auto a = basis_element(g, 1, 2);
  a += a.scaled(Cyclotomic(-1));
  CHECK(a.size() == 0);
}

TEST_CASE("counit and coproduct") {
  const auto g = build("symmetric", 3);
  for (Element a = 0; a < 6; ++a) {
    for (Element x = 0; x < 6; ++x) {
      const auto b = basis_element(g, a, x);
      CHECK(counit(b) == Cyclotomic(a == FiniteGroup::identity() ? 1 : 0));
      CHECK(double_comultiply(b).size() == 6);
    }
  }
}

TEST_CASE("R-matrix and Drinfeld element") {
  const auto z1 = build("cyclic", 1);
  const auto r1 = r_matrix(z1);
  REQUIRE(r1.size() == 1);
  CHECK(r1.terms().begin()->first == DoubleTensor2::Key{0, 0, 0, 0});
  CHECK(drinfeld_u(z1) == double_unit(z1));

  const auto z2 = build("cyclic", 2);
  // Two summands (delta_g x e) x (1 x g); expanding 1 = sum_h delta_h gives |H|^2 basis terms.
  const auto r2 = r_matrix(z2);
  CHECK(r2.size() == 4);
  std::set<std::pair<Element, Element>> first;
  for (const auto& [k, c] : r2.terms()) first.emplace(k[0], k[1]);
  CHECK(first.size() == 2);
  auto u = basis_element(z2, 0, 0);
  u += basis_element(z2, 1, 1);
  CHECK(drinfeld_u(z2) == u);

  const auto s3 = build("symmetric", 3);
  const auto u3 = drinfeld_u(s3);
  CHECK(double_multiply(u3, drinfeld_u_inverse(s3)) == double_unit(s3));
  CHECK(double_multiply(drinfeld_u_inverse(s3), u3) == double_unit(s3));
  for (const auto& b : double_basis(s3)) {
    CHECK(antipode(antipode(b)) == double_multiply(double_multiply(u3, b), drinfeld_u_inverse(s3)));
  }
}

TEST_CASE("R is invertible with inverse (S x id) R") {
  const auto s3 = build("symmetric", 3);
  const auto r = r_matrix(s3);
  const auto unit2 = tensor(double_unit(s3), double_unit(s3));
  CHECK(r * antipode_first(r) == unit2);
  CHECK(antipode_first(r) * r == unit2);
}

TEST_CASE("full axiom suite") {
  for (std::int64_t n : {1, 2, 3}) {
    CAPTURE(n);
    const auto report = check_hopf_axioms(build("cyclic", n));
    for (const auto& [name, ok] : report.checks) {
      CAPTURE(name);
      CHECK(ok);
    }
  }
  const auto report = check_hopf_axioms(build("symmetric", 3));
  for (const auto& [name, ok] : report.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
  CHECK(report.all_pass());
  CHECK(report.checks.size() >= 8);
  CHECK_THROWS_AS(check_hopf_axioms(build("cyclic", 7)), Error);
}

TEST_CASE("operands from different groups") {
  const auto a = build("cyclic", 2);
  const auto b = build("cyclic", 2);
  CHECK_THROWS_AS(double_multiply(double_unit(a), double_unit(b)), Error);
}

}  // TEST_SUITE
