#include "qdouble/hopf.hpp"

#include <algorithm>

namespace qdouble {

namespace {

const Cyclotomic kOne(1L);

// The unit 1 = sum_h delta_h (x) e placed in every factor not listed.
DoubleTensor3 place(const DoubleTensor2& r, std::size_t first, std::size_t second) {
  const FiniteGroup& g = r.group();
  DoubleTensor3 out(g);
  for (const auto& [key, c] : r.terms()) {
    const std::size_t other = 3 - first - second;
    for (Element h = 0; h < g.order(); ++h) {
      DoubleTensor3::Key k{};
      k[2 * first] = key[0];
      k[2 * first + 1] = key[1];
      k[2 * second] = key[2];
      k[2 * second + 1] = key[3];
      k[2 * other] = h;
      k[2 * other + 1] = FiniteGroup::identity();
      out.add(k, c);
    }
  }
  return out;
}

}  // namespace

DoubleElement basis_element(const FiniteGroup& g, Element delta, Element x) {
  DoubleElement out(g);
  out.add({delta, x}, kOne);
  return out;
}

std::vector<DoubleElement> double_basis(const FiniteGroup& g) {
  std::vector<DoubleElement> out;
  out.reserve(g.order() * g.order());
  for (Element d = 0; d < g.order(); ++d) {
    for (Element x = 0; x < g.order(); ++x) out.push_back(basis_element(g, d, x));
  }
  return out;
}

DoubleElement double_unit(const FiniteGroup& g) {
  DoubleElement out(g);
  for (Element h = 0; h < g.order(); ++h) out.add({h, FiniteGroup::identity()}, kOne);
  return out;
}

DoubleElement double_multiply(const DoubleElement& a, const DoubleElement& b) { return a * b; }

DoubleTensor2 double_comultiply(const DoubleElement& a) {
  const FiniteGroup& g = a.group();
  DoubleTensor2 out(g);
  for (const auto& [key, c] : a.terms()) {
    const auto [delta, x] = key;
    // sum over h k = delta
    for (Element h = 0; h < g.order(); ++h) {
      const Element k = g.mul(g.inv(h), delta);
      out.add({h, x, k, x}, c);
    }
  }
  return out;
}

Cyclotomic counit(const DoubleElement& a) {
  Cyclotomic out;
  for (const auto& [key, c] : a.terms()) {
    if (key[0] == FiniteGroup::identity()) out += c;
  }
  return out;
}

DoubleElement antipode(const DoubleElement& a) {
  const FiniteGroup& g = a.group();
  DoubleElement out(g);
  for (const auto& [key, c] : a.terms()) {
    const auto [delta, x] = key;
    const Element xi = g.inv(x);
    out.add({g.mul(g.mul(xi, g.inv(delta)), x), xi}, c);
  }
  return out;
}

DoubleTensor2 flip(const DoubleTensor2& t) {
  DoubleTensor2 out(t.group());
  for (const auto& [k, c] : t.terms()) out.add({k[2], k[3], k[0], k[1]}, c);
  return out;
}

DoubleTensor2 antipode_first(const DoubleTensor2& t) {
  const FiniteGroup& g = t.group();
  DoubleTensor2 out(g);
  for (const auto& [k, c] : t.terms()) {
    const auto s = antipode(basis_element(g, k[0], k[1]));
    for (const auto& [sk, sc] : s.terms()) out.add({sk[0], sk[1], k[2], k[3]}, c * sc);
  }
  return out;
}

DoubleElement multiply_factors(const DoubleTensor2& t) {
  const FiniteGroup& g = t.group();
  DoubleElement out(g);
  for (const auto& [k, c] : t.terms()) {
    out += (basis_element(g, k[0], k[1]) * basis_element(g, k[2], k[3])).scaled(c);
  }
  return out;
}

DoubleTensor2 r_matrix(const FiniteGroup& g) {
  DoubleTensor2 out(g);
  for (Element x = 0; x < g.order(); ++x) {
    for (Element h = 0; h < g.order(); ++h) out.add({x, FiniteGroup::identity(), h, x}, kOne);
  }
  return out;
}

DoubleElement drinfeld_u(const FiniteGroup& g) {
  DoubleElement out(g);
  const auto r = r_matrix(g);
  for (const auto& [k, c] : r.terms()) {
    const auto r1 = basis_element(g, k[0], k[1]);
    const auto r2 = basis_element(g, k[2], k[3]);
    out += (antipode(r2) * r1).scaled(c);
  }
  return out;
}

DoubleElement drinfeld_u_inverse(const FiniteGroup& g) {
  DoubleElement out(g);
  for (Element x = 0; x < g.order(); ++x) out.add({x, x}, kOne);
  return out;
}

bool HopfReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

HopfReport check_hopf_axioms(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "exhaustive Hopf checks are limited to |H| <= " + std::to_string(max_order));
  }
  const auto basis = double_basis(g);
  const auto unit = double_unit(g);
  const auto unit2 = tensor(unit, unit);
  const auto r = r_matrix(g);
  const auto u = drinfeld_u(g);
  const auto u_inv = drinfeld_u_inverse(g);

  bool unit_law = true;
  bool counit_law = true;
  bool bialgebra = true;
  bool antipode_left = true;
  bool antipode_right = true;
  bool quasitriangular = true;
  bool antipode_square = true;
  for (const auto& a : basis) {
    unit_law = unit_law && unit * a == a && a * unit == a;

    const auto delta = double_comultiply(a);
    DoubleElement left(g);
    for (const auto& [k, c] : delta.terms()) {
      left += basis_element(g, k[2], k[3]).scaled(c * counit(basis_element(g, k[0], k[1])));
    }
    counit_law = counit_law && left == a;

    const auto eps_unit = unit.scaled(counit(a));
    antipode_left = antipode_left && multiply_factors(antipode_first(delta)) == eps_unit;
    antipode_right = antipode_right && multiply_factors(flip(antipode_first(flip(delta)))) == eps_unit;

    quasitriangular = quasitriangular && flip(delta) * r == r * delta;
    antipode_square = antipode_square && antipode(antipode(a)) == u * a * u_inv;

    for (const auto& b : basis) {
      if (!bialgebra) break;
      bialgebra = double_comultiply(a * b) == delta * double_comultiply(b);
    }
  }

  const auto r12 = place(r, 0, 1);
  const auto r13 = place(r, 0, 2);
  const auto r23 = place(r, 1, 2);
  const bool yang_baxter = r12 * r13 * r23 == r23 * r13 * r12;

  const auto r_inv = antipode_first(r);
  const bool r_invertible = r * r_inv == unit2 && r_inv * r == unit2;
  const bool u_invertible = u * u_inv == unit && u_inv * u == unit;

  HopfReport report;
  report.checks = {
      {"unit", unit_law},
      {"counit", counit_law},
      {"bialgebra", bialgebra},
      {"antipode_left", antipode_left},
      {"antipode_right", antipode_right},
      {"quasitriangular", quasitriangular},
      {"yang_baxter", yang_baxter},
      {"r_invertible", r_invertible},
      {"u_invertible", u_invertible},
      {"antipode_square", antipode_square},
  };
  return report;
}

}  // namespace qdouble
