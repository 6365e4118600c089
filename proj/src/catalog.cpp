#include "qdouble/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

// (0 1 ... n-1) on n points
Permutation cycle_perm(std::size_t n, std::size_t shift_from = 0) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = shift_from; i < n; ++i) p[i] = static_cast<std::uint32_t>(i + 1 < n ? i + 1 : shift_from);
  return p;
}

Permutation from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::size_t degree = 0;
  for (const auto& c : cycles) {
    for (std::uint32_t x : c) degree = std::max<std::size_t>(degree, x + 1);
  }
  Permutation p(degree);
  std::vector<bool> moved(degree, false);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (moved[c[i]]) {
        throw Error(ErrorCode::NotABijection, "point " + std::to_string(c[i]) + " appears twice in one generator");
      }
      moved[c[i]] = true;
      p[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

std::int64_t smallest_prime_one_mod(std::int64_t m) {
  for (std::int64_t p = m + 1;; p += m) {
    bool prime = p > 1;
    for (std::int64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return p;
  }
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  for (; e > 0; e >>= 1, a = a * a % p) {
    if (e & 1) r = r * a % p;
  }
  return r;
}

// Element of multiplicative order exactly m in F_p, p = 1 mod m.
std::int64_t root_of_order(std::int64_t m, std::int64_t p) {
  for (std::int64_t a = 2; a < p; ++a) {
    const std::int64_t w = powmod(a, (p - 1) / m, p);
    std::int64_t k = 1;
    for (std::int64_t x = w; x != 1; x = x * w % p) ++k;
    if (k == m) return w;
  }
  throw Error(ErrorCode::Internal, "no root of unity of order " + std::to_string(m));
}

std::size_t partition_count(std::int64_t n) {
  static const std::size_t table[] = {1, 1, 2, 3, 5, 7};
  return table[n];
}

struct Builder {
  std::int64_t min_param;
  std::int64_t max_param;
  bool parameterized;
  FiniteGroup (*make)(std::int64_t, std::size_t);
  CatalogExpectations (*expect)(std::int64_t);
};

FiniteGroup make_cyclic(std::int64_t n, std::size_t max_order) {
  if (n == 1) return group_from_permutations({}, max_order);
  return group_from_permutations({cycle_perm(static_cast<std::size_t>(n))}, max_order);
}

FiniteGroup make_dihedral(std::int64_t n, std::size_t max_order) {
  if (n == 1) return group_from_permutations({from_cycles({{0, 1}})}, max_order);
  if (n == 2) return group_from_permutations({from_cycles({{0, 1}}), from_cycles({{2, 3}})}, max_order);
  // rotation i -> i+1 and reflection i -> -i of the n-gon
  Permutation reflection(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) reflection[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>((n - i) % n);
  return group_from_permutations({cycle_perm(static_cast<std::size_t>(n)), reflection}, max_order);
}

FiniteGroup make_binary_dihedral(std::int64_t n, std::size_t max_order) {
  // a = diag(w, w^-1) with w of order 2n and b = [[0,-1],[1,0]] over F_p, p = 1 mod 2n
  const std::int64_t p = smallest_prime_one_mod(2 * n);
  const std::int64_t w = root_of_order(2 * n, p);
  const std::int64_t w_inv = powmod(w, 2 * n - 1, p);
  return group_from_matrices(p, {Matrix2{w, 0, 0, w_inv}, Matrix2{0, p - 1, 1, 0}}, max_order);
}

FiniteGroup make_symmetric(std::int64_t n, std::size_t max_order) {
  if (n == 1) return group_from_permutations({}, max_order);
  if (n == 2) return group_from_permutations({from_cycles({{0, 1}})}, max_order);
  return group_from_permutations({cycle_perm(static_cast<std::size_t>(n)), from_cycles({{0, 1}})}, max_order);
}

FiniteGroup make_alternating(std::int64_t n, std::size_t max_order) {
  switch (n) {
    case 1:
    case 2:
      return group_from_permutations({}, max_order);
    case 3:
      return group_from_permutations({from_cycles({{0, 1, 2}})}, max_order);
    case 4:
      return group_from_permutations({from_cycles({{0, 1, 2}}), from_cycles({{1, 2, 3}})}, max_order);
    default:
      return group_from_permutations({from_cycles({{0, 1, 2}}), from_cycles({{0, 1, 2, 3, 4}})}, max_order);
  }
}

FiniteGroup make_sl2(std::int64_t p, std::size_t max_order) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw Error(ErrorCode::ParameterOutOfRange, "sl2 needs p in {2, 3, 5, 7}, got " + std::to_string(p));
  }
  return group_from_matrices(p, {Matrix2{1, 1, 0, 1}, Matrix2{0, 1, p - 1, 0}}, max_order);
}

FiniteGroup make_binary_octahedral(std::int64_t, std::size_t max_order) {
  // SL(2,17) contains the binary octahedral group since 17 = 1 mod 8
  return group_from_matrices(17, {Matrix2{15, 0, 0, 8}, Matrix2{11, 11, 10, 7}}, max_order);
}

std::size_t sl2_rank(std::int64_t q) {
  if (q == 2) return 8;
  // +-1, four unipotent-type classes, split and non-split tori
  const std::size_t classes = static_cast<std::size_t>(q) + 4;
  return 2 * classes + 4 * 2 * static_cast<std::size_t>(q) + static_cast<std::size_t>((q - 3) / 2 * (q - 1)) +
         static_cast<std::size_t>((q - 1) / 2 * (q + 1));
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"cyclic",
       {1, 64, true, make_cyclic,
        [](std::int64_t n) {
          CatalogExpectations e;
          e.order = static_cast<std::size_t>(n);
          e.class_count = e.order;
          e.double_rank = e.order * e.order;
          return e;
        }}},
      {"dihedral",
       {1, 32, true, make_dihedral,
        [](std::int64_t n) {
          CatalogExpectations e;
          e.order = static_cast<std::size_t>(2 * n);
          const auto u = static_cast<std::size_t>(n);
          e.class_count = n % 2 ? (u + 3) / 2 : u / 2 + 3;
          e.double_rank = n % 2 ? (u * u + 7) / 2 : (u * u + 28) / 2;
          return e;
        }}},
      {"binary_dihedral",
       {2, 16, true, make_binary_dihedral,
        [](std::int64_t n) {
          CatalogExpectations e;
          const auto u = static_cast<std::size_t>(n);
          e.order = 4 * u;
          e.class_count = u + 3;
          e.double_rank = 2 * u * u + 14;
          return e;
        }}},
      {"symmetric",
       {1, 5, true, make_symmetric,
        [](std::int64_t n) {
          static const std::size_t ranks[] = {0, 1, 4, 8, 21, 39};
          static const std::size_t orders[] = {1, 1, 2, 6, 24, 120};
          CatalogExpectations e;
          e.order = orders[n];
          e.class_count = partition_count(n);
          e.double_rank = ranks[n];
          return e;
        }}},
      {"alternating",
       {1, 5, true, make_alternating,
        [](std::int64_t n) {
          static const std::size_t ranks[] = {0, 1, 1, 9, 14, 22};
          static const std::size_t orders[] = {1, 1, 1, 3, 12, 60};
          static const std::size_t classes[] = {1, 1, 1, 3, 4, 5};
          CatalogExpectations e;
          e.order = orders[n];
          e.class_count = classes[n];
          e.double_rank = ranks[n];
          return e;
        }}},
      {"binary_tetrahedral",
       {0, 0, false, [](std::int64_t, std::size_t m) { return make_sl2(3, m); },
        [](std::int64_t) {
          CatalogExpectations e;
          e.order = 24;
          e.class_count = 7;
          e.double_rank = 42;
          e.block_sizes = std::vector<std::size_t>{7, 7, 6, 6, 4, 6, 6};
          e.fundamental_irrep = 3;
          return e;
        }}},
      {"binary_octahedral",
       {0, 0, false, make_binary_octahedral,
        [](std::int64_t) {
          CatalogExpectations e;
          e.order = 48;
          e.class_count = 8;
          e.double_rank = 56;
          return e;
        }}},
      {"binary_icosahedral",
       {0, 0, false, [](std::int64_t, std::size_t m) { return make_sl2(5, m); },
        [](std::int64_t) {
          CatalogExpectations e;
          e.order = 120;
          e.class_count = 9;
          e.double_rank = 74;
          return e;
        }}},
      {"sl2",
       {2, 7, true, make_sl2,
        [](std::int64_t p) {
          CatalogExpectations e;
          e.order = static_cast<std::size_t>(p * (p * p - 1));
          e.class_count = p == 2 ? 3 : static_cast<std::size_t>(p + 4);
          e.double_rank = sl2_rank(p);
          return e;
        }}},
  };
  return table;
}

const Builder& lookup(const std::string& name, std::optional<std::int64_t> param) {
  const auto& table = builders();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownEntry, "unknown catalog entry '" + name + "'");
  const Builder& b = it->second;
  if (!b.parameterized && param) {
    throw Error(ErrorCode::ParameterOutOfRange, name + " takes no parameter");
  }
  if (b.parameterized) {
    if (!param) throw Error(ErrorCode::ParameterOutOfRange, name + " needs a parameter, e.g. " + name + ":3");
    if (*param < b.min_param || *param > b.max_param || (name == "sl2" && *param == 4) ||
        (name == "sl2" && *param == 6)) {
      throw Error(ErrorCode::ParameterOutOfRange, name + " parameter " + std::to_string(*param) + " out of range");
    }
  }
  return b;
}

std::pair<std::string, std::optional<std::int64_t>> split_name(const std::string& spec) {
  if (spec.empty()) throw Error(ErrorCode::ParseError, "empty group spec");
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, std::nullopt};
  const std::string digits = spec.substr(colon + 1);
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(ErrorCode::ParseError, "bad parameter in group spec '" + spec + "'");
  }
  return {spec.substr(0, colon), std::stoll(digits)};
}

class Cursor {
 public:
  explicit Cursor(std::string text) : s_(std::move(text)) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_space();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::int64_t integer() {
    skip_space();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits || i_ - digits > 9) fail("expected an integer");
    return std::stoll(s_.substr(start, i_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }

 private:
  std::string s_;
  std::size_t i_ = 0;
};

std::vector<std::uint32_t> parse_cycle(Cursor& c) {
  std::vector<std::uint32_t> cycle;
  c.expect('(');
  if (!c.peek(')')) {
    while (true) {
      const std::int64_t x = c.integer();
      if (x < 0 || x > 1000000) c.fail("point out of range");
      cycle.push_back(static_cast<std::uint32_t>(x));
      if (c.peek(')')) break;
      c.expect(',');
    }
  }
  c.expect(')');
  return cycle;
}

FiniteGroup parse_perm(const std::string& body, std::size_t max_order) {
  Cursor c(body);
  std::vector<Permutation> gens;
  while (!c.done()) {
    if (c.peek('[')) {
      c.expect('[');
      std::vector<std::vector<std::uint32_t>> cycles;
      while (!c.peek(']')) cycles.push_back(parse_cycle(c));
      c.expect(']');
      gens.push_back(from_cycles(cycles));
    } else {
      gens.push_back(from_cycles({parse_cycle(c)}));
    }
    if (c.peek(',') || c.peek(';')) c.fail("generators are juxtaposed, not separated");
  }
  return group_from_permutations(gens, max_order);
}

FiniteGroup parse_mat(const std::string& body, std::size_t max_order) {
  Cursor c(body);
  c.expect('p');
  c.expect('=');
  const std::int64_t p = c.integer();
  c.expect(':');
  std::vector<Matrix2> gens;
  while (!c.done()) {
    Matrix2 m{};
    c.expect('[');
    for (int row = 0; row < 2; ++row) {
      if (row) c.expect(',');
      c.expect('[');
      m[2 * row] = c.integer();
      c.expect(',');
      m[2 * row + 1] = c.integer();
      c.expect(']');
    }
    c.expect(']');
    gens.push_back(m);
    if (!c.done()) c.expect(';');
  }
  if (p < 2 || p > 1000) throw Error(ErrorCode::ParameterOutOfRange, "prime p must lie in 2..1000");
  for (auto& m : gens) {
    for (auto& x : m) x = ((x % p) + p) % p;
  }
  return group_from_matrices(p, gens, max_order);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"cyclic", "n in 1..64", 1, 64, "permutation (0 1 ... n-1)"},
      {"dihedral", "n in 1..32", 1, 32, "rotation and reflection of the n-gon; order 2n"},
      {"binary_dihedral", "n in 2..16", 2, 16, "diag(w, w^-1) and [[0,-1],[1,0]] over F_p, p = 1 mod 2n; order 4n"},
      {"symmetric", "n in 1..5", 1, 5, "(0 1 ... n-1) and (0 1)"},
      {"alternating", "n in 1..5", 1, 5, "3-cycles (0 1 2), (1 2 3) for n=4; (0 1 2), (0 1 2 3 4) for n=5"},
      {"binary_tetrahedral", "", 0, 0, "SL(2,3) from [[1,1],[0,1]] and [[0,1],[2,0]]"},
      {"binary_octahedral", "", 0, 0, "[[15,0],[0,8]] and [[11,11],[10,7]] in SL(2,17)"},
      {"binary_icosahedral", "", 0, 0, "SL(2,5) from [[1,1],[0,1]] and [[0,1],[4,0]]"},
      {"sl2", "p in {2,3,5,7}", 2, 7, "SL(2,p) from [[1,1],[0,1]] and [[0,1],[p-1,0]]"},
  };
  return entries;
}

FiniteGroup build(const std::string& name, std::optional<std::int64_t> param, std::size_t max_order) {
  const Builder& b = lookup(name, param);
  FiniteGroup g = b.make(param.value_or(0), max_order);
  const auto expected = b.expect(param.value_or(0)).order;
  if (g.order() != expected) {
    throw Error(ErrorCode::Internal, name + " built a group of order " + std::to_string(g.order()) +
                                         ", expected " + std::to_string(expected));
  }
  return g;
}

CatalogExpectations expectations(const std::string& name, std::optional<std::int64_t> param) {
  return lookup(name, param).expect(param.value_or(0));
}

FiniteGroup parse_group_spec(const std::string& spec, std::size_t max_order) {
  if (spec.rfind("perm:", 0) == 0) return parse_perm(spec.substr(5), max_order);
  if (spec.rfind("mat:", 0) == 0) return parse_mat(spec.substr(4), max_order);
  const auto [name, param] = split_name(spec);
  return build(name, param, max_order);
}

std::optional<CatalogExpectations> spec_expectations(const std::string& spec) {
  if (spec.rfind("perm:", 0) == 0 || spec.rfind("mat:", 0) == 0) return std::nullopt;
  const auto [name, param] = split_name(spec);
  return expectations(name, param);
}

std::string list_groups_text() {
  std::ostringstream out;
  out << "name                parameter        construction\n";
  for (const auto& e : catalog()) {
    out << e.name << std::string(20 - std::min<std::size_t>(19, e.name.size()), ' ');
    const std::string param = e.parameter.empty() ? "-" : e.parameter;
    out << param << std::string(17 - std::min<std::size_t>(16, param.size()), ' ') << e.construction << "\n";
    if (e.parameter.empty()) {
      const auto x = expectations(e.name);
      out << "    order " << x.order << ", classes " << *x.class_count << ", double rank " << *x.double_rank << "\n";
    } else {
      out << "    double rank:";
      for (std::int64_t n = e.min_param; n <= e.max_param && n < e.min_param + 6; ++n) {
        if (e.name == "sl2" && (n == 4 || n == 6)) continue;
        const auto x = expectations(e.name, n);
        out << " " << n << "->" << *x.double_rank;
      }
      out << (e.max_param >= e.min_param + 6 ? " ...\n" : "\n");
    }
  }
  return out.str();
}

}  // namespace qdouble
