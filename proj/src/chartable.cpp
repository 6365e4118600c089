#include "qdouble/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <optional>

#include "cyclotomic_basis.hpp"
#include "qdouble/error.hpp"

namespace qdouble {

namespace {

// Arithmetic in F_p for p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p) : p_(p) {}

  std::int64_t p() const { return p_; }
  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p_);
  }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::int64_t inv(std::int64_t a) const {
    if (reduce(a) == 0) throw Error(ErrorCode::Internal, "inverse of zero mod p");
    return pow(a, p_ - 2);
  }

  std::int64_t primitive_root() const {
    const auto factors = detail::prime_factors(p_ - 1);
    for (std::int64_t g = 2; g < p_; ++g) {
      if (std::all_of(factors.begin(), factors.end(),
                      [&](std::int64_t q) { return pow(g, (p_ - 1) / q) != 1; })) {
        return g;
      }
    }
    return 1;  // p = 2
  }

 private:
  std::int64_t p_;
};

using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Row-reduces in place; returns the pivot column of each surviving row.
std::vector<std::size_t> rref(Mat& rows, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const std::int64_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t k = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {y : K y = 0} for a square matrix K.
Mat nullspace(Mat k, const PrimeField& f) {
  const std::size_t n = k.size();
  const auto pivots = rref(k, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row y(n, 0);
    y[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = f.sub(0, k[i][free]);
    basis.push_back(std::move(y));
  }
  return basis;
}

// Characteristic polynomial via reduction to upper Hessenberg form.
// Coefficients lowest degree first; monic of degree n.
Row charpoly(Mat h, const PrimeField& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t j = 0; j < n; ++j) std::swap(h[j][i], h[j][m]);
    }
    const std::int64_t tinv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      const std::int64_t u = f.mul(h[r][m - 1], tinv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][r]));
    }
  }
  std::vector<Row> polys{Row{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) * p_{m-1}
    const Row& prev = polys[m - 1];
    Row cur(m + 1, 0);
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], prev[k]);
      cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    std::int64_t prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      const std::int64_t coef = f.mul(h[i - 1][m - 1], prod);
      if (coef != 0) {
        const Row& q = polys[i - 1];
        for (std::size_t k = 0; k < q.size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, q[k]));
      }
      if (prod == 0) break;
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

std::vector<std::int64_t> roots(const Row& poly, const PrimeField& f) {
  std::vector<std::int64_t> out;
  const std::size_t degree = poly.size() - 1;
  for (std::int64_t x = 0; x < f.p() && out.size() < degree; ++x) {
    std::int64_t acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = f.add(f.mul(acc, x), poly[k]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

struct Eigenspace {
  Mat basis;  // rows in RREF
  std::vector<std::size_t> pivots;
};

// Splits each eigenspace of dimension > 1 by the eigenvalues of one class
// matrix restricted to it.
std::vector<Eigenspace> refine(const std::vector<Eigenspace>& spaces,
                               const std::vector<std::vector<std::int64_t>>& m,
                               const PrimeField& f) {
  std::vector<Eigenspace> out;
  const std::size_t r = m.size();
  for (const auto& space : spaces) {
    const std::size_t d = space.basis.size();
    if (d == 1) {
      out.push_back(space);
      continue;
    }
    // restricted matrix: M b_k = sum_l R[l][k] b_l, read off at the pivots
    Mat restricted(d, Row(d, 0));
    for (std::size_t k = 0; k < d; ++k) {
      const Row& b = space.basis[k];
      for (std::size_t l = 0; l < d; ++l) {
        const std::size_t row = space.pivots[l];
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < r; ++c) {
          if (m[row][c] != 0 && b[c] != 0) acc = f.add(acc, f.mul(f.reduce(m[row][c]), b[c]));
        }
        restricted[l][k] = acc;
      }
    }
    bool scalar = true;
    for (std::size_t i = 0; i < d && scalar; ++i) {
      for (std::size_t j = 0; j < d && scalar; ++j) {
        scalar = (i == j) ? restricted[i][j] == restricted[0][0] : restricted[i][j] == 0;
      }
    }
    if (scalar) {
      out.push_back(space);
      continue;
    }
    std::size_t total = 0;
    for (std::int64_t lambda : roots(charpoly(restricted, f), f)) {
      Mat shifted = restricted;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
      Mat vectors;
      for (const Row& y : nullspace(shifted, f)) {
        Row v(r, 0);
        for (std::size_t k = 0; k < d; ++k) {
          if (y[k] == 0) continue;
          for (std::size_t c = 0; c < r; ++c) v[c] = f.add(v[c], f.mul(y[k], space.basis[k][c]));
        }
        vectors.push_back(std::move(v));
      }
      Eigenspace e;
      e.pivots = rref(vectors, f);
      e.basis = std::move(vectors);
      total += e.basis.size();
      out.push_back(std::move(e));
    }
    if (total != d) {
      throw Error(ErrorCode::Internal, "class matrix is not diagonalizable mod p");
    }
  }
  return out;
}

std::int64_t isqrt(std::int64_t n) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

}  // namespace

std::int64_t dixon_prime(std::size_t order, std::size_t exponent, std::size_t max_class_size) {
  const auto e = static_cast<std::int64_t>(exponent);
  const __int128 bound = static_cast<__int128>(4) * order * max_class_size * max_class_size;
  for (std::int64_t p = e + 1;; p += e) {
    if (static_cast<__int128>(p) * p > bound && is_prime(p)) return p;
  }
}

std::vector<std::vector<std::vector<std::int64_t>>> class_sum_matrices(
    const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
  const std::size_t r = classes.size();
  const auto class_of = class_index_map(g, classes);
  std::vector<std::vector<std::vector<std::int64_t>>> out(
      r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0)));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t c = 0; c < r; ++c) {
      const Element c0 = classes[c].representative;
      for (Element x : classes[a].members) ++out[a][class_of[g.mul(g.inv(x), c0)]][c];
    }
  }
  return out;
}

int fs_indicator(const CharacterTable& table, std::size_t irrep) {
  Cyclotomic sum;
  for (std::size_t c = 0; c < table.size(); ++c) {
    sum += table.irreps[irrep].values[table.square_class[c]].scaled(
        mpq_class(static_cast<long>(table.classes[c].size())));
  }
  const Cyclotomic nu = sum.scaled(mpq_class(1, static_cast<unsigned long>(table.group_order)));
  const auto q = nu.as_rational();
  if (q && (*q == 1 || *q == 0 || *q == -1)) return static_cast<int>(q->get_num().get_si());
  throw Error(ErrorCode::NotAnIndicator, "Frobenius-Schur sum evaluates to " + nu.str());
}

CharacterTable character_table(const FiniteGroup& g) {
  CharacterTable table;
  table.group_order = g.order();
  table.classes = conjugacy_classes(g);
  table.class_of = class_index_map(g, table.classes);
  const std::size_t r = table.classes.size();
  for (const auto& cls : table.classes) {
    const Element x = cls.representative;
    table.inverse_class.push_back(table.class_of[g.inv(x)]);
    table.square_class.push_back(table.class_of[g.mul(x, x)]);
  }

  std::size_t max_class = 1;
  for (const auto& cls : table.classes) max_class = std::max(max_class, cls.size());
  const PrimeField f(dixon_prime(g.order(), g.exponent(), max_class));

  const auto matrices = class_sum_matrices(g, table.classes);
  Eigenspace whole;
  for (std::size_t i = 0; i < r; ++i) {
    Row v(r, 0);
    v[i] = 1;
    whole.basis.push_back(std::move(v));
    whole.pivots.push_back(i);
  }
  std::vector<Eigenspace> spaces{whole};
  for (std::size_t a = 1; a < r && spaces.size() < r; ++a) spaces = refine(spaces, matrices[a], f);
  if (spaces.size() != r) {
    throw Error(ErrorCode::Internal, "class matrices failed to separate the characters");
  }

  const auto order = static_cast<std::int64_t>(g.order());
  const std::int64_t max_degree = isqrt(order);
  const std::int64_t z = f.pow(f.primitive_root(), (f.p() - 1) / static_cast<std::int64_t>(g.exponent()));

  for (const auto& space : spaces) {
    const Row& v = space.basis[0];
    const std::int64_t v0inv = f.inv(v[0]);
    Row omega(r);
    for (std::size_t c = 0; c < r; ++c) omega[c] = f.mul(v[c], v0inv);

    // chi(1)^2 = |G| / sum_C omega(C) omega(C^-1) / |C|
    std::int64_t s = 0;
    for (std::size_t c = 0; c < r; ++c) {
      const auto size = static_cast<std::int64_t>(table.classes[c].size());
      s = f.add(s, f.mul(f.mul(omega[c], omega[table.inverse_class[c]]), f.inv(size)));
    }
    const std::int64_t d2 = f.mul(f.reduce(order), f.inv(s));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d) {
      if (f.reduce(d * d) == d2) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::Internal, "no character degree matches mod p");

    Row chi(r);
    for (std::size_t c = 0; c < r; ++c) {
      const auto size = static_cast<std::int64_t>(table.classes[c].size());
      chi[c] = f.mul(f.mul(omega[c], degree), f.inv(size));
    }

    IrreducibleCharacter irrep;
    irrep.degree = degree;
    for (std::size_t c = 0; c < r; ++c) {
      const Element x = table.classes[c].representative;
      const auto o = static_cast<std::int64_t>(g.element_order(x));
      const std::int64_t zeta = f.pow(z, static_cast<std::int64_t>(g.exponent()) / o);
      Row power_values(static_cast<std::size_t>(o));
      Element xp = FiniteGroup::identity();
      for (std::int64_t l = 0; l < o; ++l) {
        power_values[static_cast<std::size_t>(l)] = chi[table.class_of[xp]];
        xp = g.mul(xp, x);
      }
      // multiplicity of eigenvalue zeta_o^k in the representing matrix of x
      std::vector<std::pair<std::int64_t, mpq_class>> terms;
      std::int64_t total = 0;
      const std::int64_t oinv = f.inv(o);
      for (std::int64_t k = 0; k < o; ++k) {
        std::int64_t acc = 0;
        const std::int64_t step = f.inv(f.pow(zeta, k));
        std::int64_t w = 1;
        for (std::int64_t l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(power_values[static_cast<std::size_t>(l)], w));
          w = f.mul(w, step);
        }
        const std::int64_t mult = f.mul(acc, oinv);
        if (mult > degree) throw Error(ErrorCode::Internal, "eigenvalue multiplicity exceeds degree");
        if (mult != 0) terms.emplace_back(k, mpq_class(static_cast<long>(mult)));
        total += mult;
      }
      if (total != degree) throw Error(ErrorCode::Internal, "eigenvalue multiplicities do not sum to degree");
      irrep.values.push_back(Cyclotomic::from_terms(o, terms));
    }
    table.irreps.push_back(std::move(irrep));
  }

  std::int64_t sum_squares = 0;
  for (const auto& irrep : table.irreps) sum_squares += irrep.degree * irrep.degree;
  if (sum_squares != order) throw Error(ErrorCode::Internal, "degrees do not satisfy sum d^2 = |G|");

  auto is_trivial = [](const IrreducibleCharacter& c) {
    return std::all_of(c.values.begin(), c.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1L); });
  };
  std::vector<std::vector<std::string>> keys;
  std::vector<std::size_t> perm(table.irreps.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& irrep : table.irreps) {
    std::vector<std::string> key;
    for (const auto& v : irrep.values) key.push_back(v.serialize());
    keys.push_back(std::move(key));
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = table.irreps[a];
    const auto& y = table.irreps[b];
    if (x.degree != y.degree) return x.degree < y.degree;
    const bool tx = is_trivial(x);
    const bool ty = is_trivial(y);
    if (tx != ty) return tx;
    return keys[a] < keys[b];
  });
  std::vector<IrreducibleCharacter> sorted;
  for (std::size_t i : perm) sorted.push_back(std::move(table.irreps[i]));
  table.irreps = std::move(sorted);
  for (std::size_t i = 0; i < table.irreps.size(); ++i) table.irreps[i].fs_indicator = fs_indicator(table, i);
  return table;
}

}  // namespace qdouble
