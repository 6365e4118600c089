#include "qdouble/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

/// Breadth-first closure from the identity, generators applied on the right in
/// the order given. Returns the elements in discovery order.
template <typename Key, typename Compose>
std::vector<Key> enumerate_closure(const Key& identity, const std::vector<Key>& gens,
                                   Compose compose, std::size_t max_order,
                                   std::map<Key, Element>& index) {
  std::vector<Key> elements{identity};
  index.clear();
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Key& gen : gens) {
      Key next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= max_order) {
        throw Error(ErrorCode::ClosureTooLarge,
                    "closure exceeds the bound of " + std::to_string(max_order) + " elements");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

template <typename Key, typename Compose>
std::vector<Element> build_table(const std::vector<Key>& elements, Compose compose,
                                 const std::map<Key, Element>& index) {
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return table;
}

std::string cycle_string(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::string matrix_string(const Matrix2& m) {
  std::ostringstream out;
  out << "[[" << m[0] << ',' << m[1] << "],[" << m[2] << ',' << m[3] << "]]";
  return out.str();
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<Element> closure_of(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(out[head], s);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<Element> generators, std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      inverse_(order, 0),
      element_order_(order, 1),
      generators_(std::move(generators)),
      labels_(std::move(labels)) {
  if (order_ == 0 || table_.size() != order_ * order_) {
    throw Error(ErrorCode::Internal, "multiplication table has the wrong size");
  }
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity()) {
        inverse_[a] = b;
        break;
      }
    }
  }
  for (Element a = 0; a < order_; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != identity(); x = mul(x, a)) {
      ++k;
      if (k > order_ + 1) throw Error(ErrorCode::Internal, "element of unbounded order");
    }
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, element_order_[a]);
  }
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(element_order_[a]);
  k %= n;
  if (k < 0) k += n;
  Element result = identity();
  for (std::int64_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

std::string FiniteGroup::label(Element a) const {
  if (a < labels_.size()) return labels_[a];
  return "g" + std::to_string(a);
}

bool FiniteGroup::check_axioms() const {
  for (Element a = 0; a < order_; ++a) {
    if (mul(identity(), a) != a || mul(a, identity()) != a) return false;
    if (mul(a, inv(a)) != identity() || mul(inv(a), a) != identity()) return false;
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  std::vector<Element> gens(generators_.begin(), generators_.end());
  return closure_of(*this, gens).size() == order_;
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& gens,
                                    std::size_t max_order) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Permutation> padded;
  padded.reserve(gens.size());
  for (const auto& g : gens) {
    Permutation p(degree);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      p[i] = i < g.size() ? g[i] : static_cast<std::uint32_t>(i);
      if (p[i] >= degree || hit[p[i]]) {
        throw Error(ErrorCode::NotABijection, "generator " + cycle_string(p) + " is not a bijection");
      }
      hit[p[i]] = true;
    }
    padded.push_back(std::move(p));
  }
  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0U);
  // (a*b)(i) = a(b(i))
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  std::map<Permutation, Element> index;
  auto elements = enumerate_closure(identity, padded, compose, max_order, index);
  auto table = build_table(elements, compose, index);
  std::vector<Element> gen_idx;
  for (const auto& p : padded) gen_idx.push_back(index.at(p));
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(cycle_string(e));
  return FiniteGroup(elements.size(), std::move(table), std::move(gen_idx), std::move(labels));
}

FiniteGroup group_from_matrices(std::int64_t p, const std::vector<Matrix2>& gens,
                                std::size_t max_order) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::ParameterOutOfRange, "modulus " + std::to_string(p) + " is not prime");
  }
  std::vector<Matrix2> reduced;
  for (const auto& m : gens) {
    Matrix2 r{mod(m[0], p), mod(m[1], p), mod(m[2], p), mod(m[3], p)};
    if (mod(r[0] * r[3] - r[1] * r[2], p) == 0) {
      throw Error(ErrorCode::SingularMatrix, matrix_string(r) + " is singular mod " + std::to_string(p));
    }
    reduced.push_back(r);
  }
  auto compose = [p](const Matrix2& a, const Matrix2& b) {
    return Matrix2{(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
                   (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
  };
  std::map<Matrix2, Element> index;
  auto elements = enumerate_closure(Matrix2{1, 0, 0, 1}, reduced, compose, max_order, index);
  auto table = build_table(elements, compose, index);
  std::vector<Element> gen_idx;
  for (const auto& m : reduced) gen_idx.push_back(index.at(m));
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(matrix_string(e));
  return FiniteGroup(elements.size(), std::move(table), std::move(gen_idx), std::move(labels));
}

Element find_matrix(const FiniteGroup& g, std::int64_t p, const Matrix2& m) {
  const std::string key = matrix_string({mod(m[0], p), mod(m[1], p), mod(m[2], p), mod(m[3], p)});
  const auto& labels = g.labels();
  auto it = std::find(labels.begin(), labels.end(), key);
  return it == labels.end() ? static_cast<Element>(g.order())
                            : static_cast<Element>(it - labels.begin());
}

std::vector<Element> centralizer(const FiniteGroup& g, Element a) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.mul(x, a) == g.mul(a, x)) out.push_back(x);
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> assigned(n, false);
  std::vector<ConjugacyClass> classes;
  for (Element a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    ConjugacyClass cls;
    cls.representative = a;
    cls.element_order = g.element_order(a);
    for (Element x = 0; x < n; ++x) {
      const Element b = g.conjugate(x, a);
      if (!assigned[b]) {
        assigned[b] = true;
        cls.members.push_back(b);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.centralizer = centralizer(g, a);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& x, const ConjugacyClass& y) {
    return std::tuple(x.element_order, x.size(), x.representative) <
           std::tuple(y.element_order, y.size(), y.representative);
  });
  return classes;
}

std::vector<std::size_t> class_index_map(const FiniteGroup& g,
                                         const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> map(g.order(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Element x : classes[c].members) map[x] = c;
  }
  return map;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& members) {
  std::vector<bool> in(g.order(), false);
  for (Element x : members) {
    if (x >= g.order() || in[x]) return false;
    in[x] = true;
  }
  if (members.empty() || !in[FiniteGroup::identity()]) return false;
  for (Element x : members) {
    if (!in[g.inv(x)]) return false;
    for (Element y : members) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  return true;
}

Transversal left_transversal(const FiniteGroup& g, const std::vector<Element>& subgroup) {
  if (!is_subgroup(g, subgroup)) {
    throw Error(ErrorCode::NotASubgroup, "element list is not closed under product and inverse");
  }
  Transversal t;
  t.subgroup = subgroup;
  std::vector<bool> covered(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    t.coset_reps.push_back(x);
    for (Element h : subgroup) covered[g.mul(x, h)] = true;
  }
  return t;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  if (!is_subgroup(g, members)) {
    throw Error(ErrorCode::NotASubgroup, "element list is not closed under product and inverse");
  }
  const std::size_t m = members.size();
  std::vector<std::int64_t> from_parent(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i) from_parent[members[i]] = static_cast<std::int64_t>(i);

  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = static_cast<Element>(from_parent[g.mul(members[i], members[j])]);
    }
  }

  // Greedy generating set: smallest element not yet generated.
  std::vector<Element> parent_gens;
  std::vector<bool> generated(g.order(), false);
  generated[0] = true;
  for (Element x : members) {
    if (generated[x]) continue;
    parent_gens.push_back(x);
    for (Element y : closure_of(g, parent_gens)) generated[y] = true;
  }
  std::vector<Element> gens;
  for (Element x : parent_gens) gens.push_back(static_cast<Element>(from_parent[x]));

  std::vector<std::string> labels;
  for (Element x : members) labels.push_back(g.label(x));
  return Subgroup{FiniteGroup(m, std::move(table), std::move(gens), std::move(labels)),
                  std::move(members), std::move(from_parent)};
}

}  // namespace qdouble
