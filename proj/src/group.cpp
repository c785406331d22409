#include "fgre/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fgre/error.hpp"

namespace fgre {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = p.size();
    for (auto x : p) h = h * 1000003 ^ x;
    return h;
  }
};

/// Breadth-first closure from the identity by right multiplication with the
/// generators. Deterministic for a fixed generator order.
template <class T, class Hash, class Mul>
std::vector<T> enumerate_closure(const T& identity, const std::vector<T>& generators, Mul mul,
                                 std::size_t cap) {
  std::unordered_map<T, std::size_t, Hash> seen;
  std::vector<T> elements{identity};
  seen.emplace(identity, 0);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& gen : generators) {
      T next = mul(elements[k], gen);
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) {
        throw Error(ErrorKind::kCapExceeded, "closure exceeded " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

template <class T, class Hash, class Mul>
std::vector<std::vector<std::size_t>> table_of(const std::vector<T>& elements, Mul mul) {
  std::unordered_map<T, std::size_t, Hash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end()) throw Error(ErrorKind::kInternalInconsistency, "closure is not closed");
      table[a][b] = it->second;
    }
  }
  return table;
}

template <class T, class Hash>
std::vector<std::size_t> positions_of(const std::vector<T>& elements, const std::vector<T>& wanted) {
  std::unordered_map<T, std::size_t, Hash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  std::vector<std::size_t> out;
  for (const auto& w : wanted) out.push_back(index.at(w));
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
  return out;
}

std::string cycle_label(const Permutation& p) {
  std::vector<bool> done(p.size(), false);
  std::string out;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool payload_less(const Payload& x, const Payload& y, std::size_t ix, std::size_t iy) {
  if (x.index() != y.index()) return x.index() < y.index();
  if (const auto* qx = std::get_if<Quaternion>(&x)) return *qx < std::get<Quaternion>(y);
  if (const auto* px = std::get_if<Permutation>(&x)) {
    const auto& py = std::get<Permutation>(y);
    if (*px != py) return *px < py;
    return ix < iy;
  }
  if (const auto* mx = std::get_if<CycMatrix>(&x)) {
    const auto& my = std::get<CycMatrix>(y);
    if (*mx < my) return true;
    if (my < *mx) return false;
    return ix < iy;
  }
  return ix < iy;
}

void check_table_shape(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::kInvalidInput, "empty group table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::kInvalidInput, "Cayley table is not square");
    std::vector<bool> hit(n, false);
    for (auto x : row) {
      if (x >= n) throw Error(ErrorKind::kInvalidInput, "Cayley table entry out of range");
      if (hit[x]) throw Error(ErrorKind::kInvalidInput, "Cayley table row is not a permutation");
      hit[x] = true;
    }
  }
}

}  // namespace

std::size_t largest_prime_factor(std::size_t n) {
  std::size_t best = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  }
  return n > 1 ? std::max(best, n) : best;
}

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<std::size_t>>& table,
                                    std::vector<std::string> labels, std::vector<Payload> payloads,
                                    std::vector<std::size_t> generators,
                                    std::vector<std::string> generator_names) {
  check_table_shape(table);
  const std::size_t n = table.size();
  if (payloads.empty()) payloads.assign(n, std::monostate{});
  if (payloads.size() != n || (!labels.empty() && labels.size() != n)) {
    throw Error(ErrorKind::kInvalidInput, "label/payload count does not match the table");
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorKind::kInvalidInput, "Cayley table has no identity");
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw Error(ErrorKind::kInvalidInput, "Cayley table is not associative");
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x = a;
    while (x != *identity) {
      x = table[x][a];
      ++order[a];
      if (order[a] > n) throw Error(ErrorKind::kInvalidInput, "element of infinite order in table");
    }
  }

  std::vector<std::size_t> perm(n);  // canonical position -> input index
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t id = *identity;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    if (x == id || y == id) return x == id && y != id;
    if (order[x] != order[y]) return order[x] < order[y];
    return payload_less(payloads[x], payloads[y], x, y);
  });
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[perm[k]] = k;

  FiniteGroup g;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  g.labels_.resize(n);
  g.payloads_.resize(n);
  g.element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = position[table[perm[a]][perm[b]]];
    g.payloads_[a] = payloads[perm[a]];
    g.element_order_[a] = order[perm[a]];
    g.labels_[a] = labels.empty() ? (a == 0 ? "1" : "g" + std::to_string(a)) : labels[perm[a]];
  }
  g.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) g.inverse_[a] = b;
    }
  }

  if (generators.empty()) {
    // greedy: add the first element not yet generated
    std::vector<bool> in_sub(n, false);
    in_sub[0] = true;
    std::vector<std::size_t> sub{0};
    for (std::size_t x = 1; x < n; ++x) {
      if (in_sub[x]) continue;
      g.generators_.push_back(x);
      for (std::size_t k = 0; k < sub.size(); ++k) {
        for (auto gen : g.generators_) {
          const std::size_t y = g.mul(sub[k], gen);
          if (!in_sub[y]) {
            in_sub[y] = true;
            sub.push_back(y);
          }
        }
      }
    }
  } else {
    for (auto gen : generators) {
      if (gen >= n) throw Error(ErrorKind::kInvalidInput, "generator index out of range");
      g.generators_.push_back(position[gen]);
    }
  }
  if (generator_names.empty()) {
    for (auto gen : g.generators_) g.generator_names_.push_back(g.labels_[gen]);
  } else {
    if (generator_names.size() != g.generators_.size()) {
      throw Error(ErrorKind::kInvalidInput, "generator name count mismatch");
    }
    g.generator_names_ = std::move(generator_names);
  }
  g.compute_classes();
  return g;
}

void FiniteGroup::compute_classes() {
  const std::size_t n = order();
  std::vector<bool> seen(n, false);
  classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> members;
    for (std::size_t h = 0; h < n; ++h) members.insert(mul(mul(h, x), inverse(h)));
    ConjugacyClass c;
    c.members.assign(members.begin(), members.end());
    for (auto m : c.members) seen[m] = true;
    c.representative = c.members.front();
    c.size = c.members.size();
    c.element_order = element_order_[c.representative];
    classes_.push_back(std::move(c));
  }
  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    const auto key = [](const ConjugacyClass& c) {
      return std::tuple(largest_prime_factor(c.element_order), c.element_order, c.size, c.representative);
    };
    return key(a) < key(b);
  });
  class_of_.assign(n, 0);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    for (auto m : classes_[k].members) class_of_[m] = k;
  }
}

std::size_t FiniteGroup::power(std::size_t a, long n) const {
  const long o = static_cast<long>(element_order_[a]);
  long e = ((n % o) + o) % o;
  std::size_t x = 0;
  for (long k = 0; k < e; ++k) x = mul(x, a);
  return x;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : element_order_) e = std::lcm(e, o);
  return e;
}

bool FiniteGroup::is_abelian() const { return classes_.size() == order(); }

std::optional<std::size_t> FiniteGroup::find_label(const std::string& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == label) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> FiniteGroup::find_quaternion(const Quaternion& q) const {
  for (std::size_t k = 0; k < payloads_.size(); ++k) {
    if (const auto* p = std::get_if<Quaternion>(&payloads_[k]); p && *p == q) return k;
  }
  return std::nullopt;
}

FiniteGroup group_from_quaternions(std::string name, const std::vector<Quaternion>& generators,
                                   std::size_t cap, std::vector<std::string> generator_names) {
  for (const auto& q : generators) {
    if (q.is_zero()) throw Error(ErrorKind::kInvalidInput, "zero quaternion generator");
  }
  const auto mul = [](const Quaternion& x, const Quaternion& y) { return x * y; };
  auto elements = enumerate_closure<Quaternion, QuaternionHash>(Quaternion::one(), generators, mul, cap);
  const auto table = table_of<Quaternion, QuaternionHash>(elements, mul);
  std::vector<std::string> labels;
  std::vector<Payload> payloads;
  for (const auto& q : elements) {
    labels.push_back(q.label());
    payloads.emplace_back(q);
  }
  auto gens = positions_of<Quaternion, QuaternionHash>(elements, generators);
  return FiniteGroup::from_table(std::move(name), table, std::move(labels), std::move(payloads), std::move(gens),
                                 std::move(generator_names));
}

FiniteGroup group_from_permutations(std::string name, const std::vector<Permutation>& generators,
                                    std::size_t cap) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(ErrorKind::kInvalidInput, "permutations of different degrees");
    std::vector<bool> hit(degree, false);
    for (auto x : p) {
      if (x >= degree || hit[x]) throw Error(ErrorKind::kInvalidInput, "generator is not a bijection");
      hit[x] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto elements = enumerate_closure<Permutation, PermutationHash>(id, generators, compose, cap);
  const auto table = table_of<Permutation, PermutationHash>(elements, compose);
  std::vector<std::string> labels;
  std::vector<Payload> payloads;
  for (const auto& p : elements) {
    labels.push_back(cycle_label(p));
    payloads.emplace_back(p);
  }
  auto gens = positions_of<Permutation, PermutationHash>(elements, generators);
  return FiniteGroup::from_table(std::move(name), table, std::move(labels), std::move(payloads), std::move(gens));
}

FiniteGroup group_from_matrices(std::string name, const std::vector<CycMatrix>& generators, std::size_t cap) {
  const auto closure = matrix_group_closure(generators, cap, true);
  const auto mul = [](const CycMatrix& x, const CycMatrix& y) { return x * y; };
  const auto table = table_of<CycMatrix, CycMatrixHash>(closure.elements, mul);
  std::vector<Payload> payloads(closure.elements.begin(), closure.elements.end());
  auto gens = positions_of<CycMatrix, CycMatrixHash>(closure.elements, generators);
  return FiniteGroup::from_table(std::move(name), table, {}, std::move(payloads), std::move(gens));
}

FiniteGroup group_from_cayley(std::string name, const std::vector<std::vector<std::size_t>>& table,
                              std::vector<std::string> labels, std::vector<std::size_t> generators) {
  check_table_shape(table);
  if (labels.empty()) {
    for (std::size_t k = 0; k < table.size(); ++k) labels.push_back(std::to_string(k));
  }
  auto g = FiniteGroup::from_table(std::move(name), table, std::move(labels), {}, std::move(generators));
  if (!satisfies_group_axioms(g)) throw Error(ErrorKind::kInvalidInput, "table is not a group");
  return g;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw Error(ErrorKind::kInvalidInput, "bad cycle notation '" + text + "'");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorKind::kInvalidInput, "unclosed cycle in '" + text + "'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<std::size_t> cycle;
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::kInvalidInput, "bad point '" + token + "' in cycle");
      }
      const std::size_t x = std::stoul(token);
      if (x >= degree) throw Error(ErrorKind::kInvalidInput, "cycle point out of range");
      cycle.push_back(x);
    }
    // apply this cycle after the ones to its right: text is read as a product
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0u);
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = static_cast<std::uint32_t>(cycle[(k + 1) % cycle.size()]);
    p = compose(p, c);
    pos = close + 1;
  }
  std::vector<bool> hit(degree, false);
  for (auto x : p) {
    if (hit[x]) throw Error(ErrorKind::kInvalidInput, "cycles do not describe a bijection");
    hit[x] = true;
  }
  return p;
}

ClassProfile class_profile(const FiniteGroup& g) {
  ClassProfile out;
  for (const auto& c : g.classes()) {
    out.sizes.push_back(c.size);
    out.orders.push_back(c.element_order);
  }
  return out;
}

std::vector<std::size_t> center(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

bool satisfies_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return false;
    if (g.mul(x, g.inverse(x)) != 0 || g.mul(g.inverse(x), x) != 0) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
      }
    }
  }
  return true;
}

bool Homomorphism::verify() const {
  if (!source || !target || images.size() != source->order()) return false;
  for (std::size_t x = 0; x < source->order(); ++x) {
    if (images[x] >= target->order()) return false;
    for (std::size_t y = 0; y < source->order(); ++y) {
      if (images[source->mul(x, y)] != target->mul(images[x], images[y])) return false;
    }
  }
  return true;
}

std::map<std::size_t, std::size_t> AutomorphismGroup::order_census() const {
  std::map<std::size_t, std::size_t> census;
  for (std::size_t k = 0; k < group->order(); ++k) ++census[group->element_order(k)];
  return census;
}

namespace {

/// Extends generator images along the Cayley graph of the subgroup generated
/// by the first `count` generators. Returns false on any inconsistency.
bool extend_images(const FiniteGroup& g, const std::vector<std::size_t>& gens,
                   const std::vector<std::size_t>& images, std::size_t count, std::vector<std::size_t>& map) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  map.assign(g.order(), kUnset);
  map[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::size_t x = queue[k];
    for (std::size_t j = 0; j < count; ++j) {
      const std::size_t y = g.mul(x, gens[j]);
      const std::size_t val = g.mul(map[x], images[j]);
      if (map[y] == kUnset) {
        map[y] = val;
        queue.push_back(y);
      } else if (map[y] != val) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

AutomorphismGroup automorphism_group(const FiniteGroup& g) {
  if (g.order() > 64) throw Error(ErrorKind::kInvalidInput, "automorphism search limited to order 64");
  const auto& gens = g.generators();
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const auto& source_class = g.classes()[g.class_of(gens[j])];
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto& c = g.classes()[g.class_of(x)];
      if (c.element_order == source_class.element_order && c.size == source_class.size) {
        candidates[j].push_back(x);
      }
    }
  }

  std::vector<Permutation> found;
  std::vector<std::size_t> images(gens.size());
  std::vector<std::size_t> map;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) {
      if (!extend_images(g, gens, images, depth, map)) return;
      std::vector<bool> hit(g.order(), false);
      for (auto y : map) {
        if (y >= g.order() || hit[y]) return;
        hit[y] = true;
      }
      found.emplace_back(map.begin(), map.end());
      return;
    }
    for (auto x : candidates[depth]) {
      images[depth] = x;
      if (extend_images(g, gens, images, depth + 1, map)) search(depth + 1);
    }
  };
  search(0);
  if (found.empty()) {
    // trivial group: only the identity map
    found.push_back(Permutation(g.order(), 0));
  }

  std::set<Permutation> inner;
  for (std::size_t h = 0; h < g.order(); ++h) {
    Permutation conj(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) conj[x] = static_cast<std::uint32_t>(g.mul(g.mul(h, x), g.inverse(h)));
    inner.insert(conj);
  }

  AutomorphismGroup out;
  out.group = std::make_shared<const FiniteGroup>(group_from_permutations("Aut(" + g.name() + ")", found));
  for (std::size_t k = 0; k < out.group->order(); ++k) {
    const auto& perm = std::get<Permutation>(out.group->payload(k));
    Automorphism a;
    a.images.assign(perm.begin(), perm.end());
    a.inner = inner.contains(perm);
    if (a.inner) ++out.inner_count;
    out.automorphisms.push_back(std::move(a));
  }
  return out;
}

MatrixClosure matrix_group_closure(const std::vector<CycMatrix>& generators, std::size_t cap, bool keep_elements) {
  if (generators.empty()) throw Error(ErrorKind::kInvalidInput, "matrix closure needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const auto& m : generators) {
    if (!m.is_square() || m.rows() != n) throw Error(ErrorKind::kInvalidInput, "generators must be square of equal size");
    if (matrix_rank(m) != n) throw Error(ErrorKind::kNotInvertible, "singular generator");
  }
  const auto mul = [](const CycMatrix& x, const CycMatrix& y) { return x * y; };
  auto elements = enumerate_closure<CycMatrix, CycMatrixHash>(CycMatrix::identity(n), generators, mul, cap);
  MatrixClosure out;
  out.order = elements.size();
  if (keep_elements) out.elements = std::move(elements);
  return out;
}

}  // namespace fgre
