// Acceptance run: one line per criterion. Each criterion is decided by an
// oracle written here from first principles (quaternion arithmetic, explicit
// convolution, brute-force enumeration) and cross-checked against the library.
// Exit status is nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fgre/error.hpp"
#include "fgre/verify.hpp"
#include "reference_tables.hpp"
#include "random_scalars.hpp"

using namespace fgre;

namespace {

// ---------------------------------------------------------------- oracles

/// The 24 unit Hurwitz quaternions, listed directly.
std::vector<Quaternion> units_2t() {
  std::vector<Quaternion> out;
  for (int s : {1, -1}) {
    out.push_back({s, 0, 0, 0});
    out.push_back({0, s, 0, 0});
    out.push_back({0, 0, s, 0});
    out.push_back({0, 0, 0, s});
  }
  const Rational h = Rational(1) / 2;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        for (int d : {1, -1}) out.push_back({h * a, h * b, h * c, h * d});
  return out;
}

std::vector<Quaternion> units_q8() {
  std::vector<Quaternion> out;
  for (int s : {1, -1}) {
    out.push_back({s, 0, 0, 0});
    out.push_back({0, s, 0, 0});
    out.push_back({0, 0, s, 0});
    out.push_back({0, 0, 0, s});
  }
  return out;
}

std::size_t quaternion_order(const Quaternion& q) {
  Quaternion p = q;
  std::size_t n = 1;
  while (!(p == Quaternion::one())) {
    p = p * q;
    ++n;
  }
  return n;
}

/// Group algebra over Q on quaternion units, by explicit convolution.
using QElem = std::map<Quaternion, Rational>;

QElem qe(std::initializer_list<std::pair<Quaternion, Rational>> terms) {
  QElem out;
  for (const auto& [q, c] : terms) out[q] += c;
  return out;
}
QElem unit(const Quaternion& q) { return qe({{q, 1}}); }

QElem clean(QElem a) {
  for (auto it = a.begin(); it != a.end();) it = sgn(it->second) == 0 ? a.erase(it) : std::next(it);
  return a;
}
QElem operator+(QElem a, const QElem& b) {
  for (const auto& [q, c] : b) a[q] += c;
  return clean(a);
}
QElem operator*(const Rational& s, QElem a) {
  for (auto& [q, c] : a) c *= s;
  return clean(a);
}
QElem operator-(const QElem& a, const QElem& b) { return a + Rational(-1) * b; }
QElem operator*(const QElem& a, const QElem& b) {
  QElem out;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) out[p * q] += x * y;
  return clean(out);
}

/// Incremental row echelon basis over Q.
class RationalSpan {
 public:
  bool add(std::vector<Rational> v) {
    for (const auto& [pivot, row] : rows_) {
      if (sgn(v[pivot]) == 0) continue;
      const Rational f = v[pivot] / row[pivot];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) != 0) {
        // Keep earlier rows reduced against the new pivot too.
        for (auto& [p, row] : rows_) {
          if (sgn(row[k]) == 0) continue;
          const Rational f = row[k] / v[k];
          for (std::size_t m = 0; m < v.size(); ++m) row[m] -= f * v[m];
        }
        rows_.emplace_back(k, std::move(v));
        return true;
      }
    }
    return false;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

std::vector<Rational> flatten(const CycMatrix& m) {
  std::vector<Rational> out;
  for (const auto& x : m.entries())
    for (const auto& c : x.coords()) out.push_back(c);
  return out;
}

/// Dimension of the real Lie algebra generated by the matrices (bracket closure, span over Q).
std::size_t lie_dim_oracle(const std::vector<CycMatrix>& gens) {
  RationalSpan span;
  std::vector<CycMatrix> basis;
  for (const auto& g : gens)
    if (span.add(flatten(g))) basis.push_back(g);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const CycMatrix br = basis[a] * basis[b] - basis[b] * basis[a];
      if (span.add(flatten(br))) basis.push_back(br);
    }
  }
  return basis.size();
}

using Mat2 = CycMatrix;

/// Matrix of X -> A X B on 2x2 matrices, columns indexed by the unit matrices E_rc.
CycMatrix realize(const Mat2& a, const Mat2& b) {
  CycMatrix out(4, 4);
  for (std::size_t col = 0; col < 4; ++col) {
    Mat2 e(2, 2);
    e(col / 2, col % 2) = CycScalar(1L);
    const Mat2 img = a * e * b;
    for (std::size_t r = 0; r < 4; ++r) out(r, col) = img(r / 2, r % 2);
  }
  return out;
}

/// Matrix of x -> q x (left) or x -> x q (right) on H in the basis 1, i, j, k.
CycMatrix quaternion_action(const Quaternion& q, bool left) {
  const std::vector<Quaternion> basis = {Quaternion::one(), Quaternion::unit_i(), Quaternion::unit_j(),
                                         Quaternion::unit_k()};
  CycMatrix out(4, 4);
  for (std::size_t col = 0; col < 4; ++col) {
    const Quaternion img = left ? q * basis[col] : basis[col] * q;
    const auto c = img.coords();
    for (std::size_t r = 0; r < 4; ++r) out(r, col) = CycScalar(c[r]);
  }
  return out;
}

std::size_t bfs_closure(const std::vector<CycMatrix>& gens) {
  std::set<CycMatrix> seen = {CycMatrix::identity(gens.front().rows())};
  std::vector<CycMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<CycMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        CycMatrix p = m * g;
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

// ---------------------------------------------------------------- reporting

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void info(const std::string& what) { notes.push_back(what); }
};

std::string str(std::size_t n) { return std::to_string(n); }

const Character& row_of(const CharacterTable& t, const std::string& label) { return t.rows[*t.find_label(label)]; }

// ---------------------------------------------------------------- criteria

Outcome classes() {
  Outcome o;
  const auto units = units_2t();
  const Quaternion one = Quaternion::one(), i = Quaternion::unit_i(), j = Quaternion::unit_j(),
                   k = Quaternion::unit_k(), w = quaternion_w(), v = quaternion_v();
  const std::vector<std::tuple<std::set<Quaternion>, std::size_t, std::string>> published = {
      {{one}, 1, "{1}"},
      {{-one}, 2, "{-1}"},
      {{i, -i, j, -j, k, -k}, 4, "{+-i,+-j,+-k}"},
      {{w, w * i, w * j, w * k}, 3, "{w,wi,wj,wk}"},
      {{v, -(v * i), -(v * j), -(v * k)}, 3, "{v,-vi,-vj,-vk}"},
      {{-w, -(w * i), -(w * j), -(w * k)}, 6, "{-w,...}"},
      {{-v, v * i, v * j, v * k}, 6, "{-v,vi,vj,vk}"},
  };
  const auto g = builtin_group("2T");
  std::multiset<std::pair<std::size_t, std::size_t>> library_profile;
  for (const auto& cl : g->classes()) library_profile.insert({cl.size, cl.element_order});
  std::multiset<std::pair<std::size_t, std::size_t>> published_profile;
  for (const auto& [members, order, name] : published) {
    std::set<Quaternion> orbit;
    for (const auto& x : units) orbit.insert(x * *members.begin() * x.conj());
    o.need(orbit == members, name + " is a conjugacy class");
    for (const auto& m : members) o.need(quaternion_order(m) == order, name + " element orders");
    published_profile.insert({members.size(), order});
    std::vector<std::size_t> idx;
    for (const auto& m : members) idx.push_back(*g->find_quaternion(m));
    std::sort(idx.begin(), idx.end());
    o.need(std::any_of(g->classes().begin(), g->classes().end(),
                       [&](const ConjugacyClass& cl) { return cl.members == idx; }),
           name + " found among computed classes");
  }
  const auto profile = class_profile(*g);
  o.need(profile.sizes == std::vector<std::size_t>{1, 1, 6, 4, 4, 4, 4}, "sizes [1,1,6,4,4,4,4]");
  o.need(profile.orders == std::vector<std::size_t>{1, 2, 4, 3, 3, 6, 6}, "orders [1,2,4,3,3,6,6]");
  o.need(library_profile == published_profile, "class profile");
  o.info("7 classes, membership matched as sets");
  return o;
}

Outcome complex_table() {
  Outcome o;
  const auto t = complex_character_table(builtin_group("2T"));
  const auto rows = testing::reference_complex_rows();
  o.need(testing::rows_at(t, testing::complex_column_elements()) ==
             std::multiset<std::vector<CycScalar>>(rows.begin(), rows.end()),
         "7x7 rows as a multiset");
  o.info("7 rows matched up to row permutation");
  return o;
}

Outcome real_table() {
  Outcome o;
  const auto t = real_character_table(complex_character_table(builtin_group("2T")));
  const auto rows = testing::reference_real_rows();
  o.need(testing::rows_at(t, testing::real_column_elements()) ==
             std::multiset<std::vector<CycScalar>>(rows.begin(), rows.end()),
         "5x5 rows as a multiset");
  const auto at = [&](const std::string& label) {
    std::vector<CycScalar> out;
    for (const auto& q : testing::real_column_elements())
      out.push_back(row_of(t, label).values[t.group->class_of(*t.group->find_quaternion(q))]);
    return out;
  };
  o.need(at("4H") == rows[3], "4H row (4,-4,0,-2,2)");
  o.need(at("4C") == rows[4], "4C row (4,-4,0,1,-1)");
  return o;
}

Outcome wedderburn() {
  Outcome o;
  o.need(real_wedderburn(builtin_group("Q8")).format() == "4R + H", "real Q8 = 4R + H");
  const auto r = real_wedderburn(builtin_group("2T"));
  std::multiset<std::string> names;
  std::vector<std::size_t> dims;
  for (const auto& b : r.blocks) {
    names.insert(block_name(b));
    dims.push_back(b.real_dimension);
  }
  o.need(names == std::multiset<std::string>{"R", "C", "H", "M2(C)", "M3(R)"}, "real 2T blocks");
  o.need(dims == std::vector<std::size_t>{1, 2, 4, 8, 9}, "real 2T dims [1,2,4,8,9]");
  // Oracle: block dimension d^2/<rho,rho> from the published real rows (column sizes 1,1,6,8,8).
  const std::vector<long> sizes = {1, 1, 6, 8, 8};
  std::vector<std::size_t> oracle;
  for (const auto& row : testing::reference_real_rows()) {
    CycScalar norm;
    for (std::size_t c = 0; c < 5; ++c) norm += CycScalar(sizes[c]) * row[c] * row[c].conj();
    norm *= CycScalar(Rational(1, 24));
    const CycScalar d = row[0];
    oracle.push_back(static_cast<std::size_t>(((d * d) * norm.inverse()).coord(0).get_num().get_si()));
  }
  std::sort(oracle.begin(), oracle.end());
  o.need(oracle == dims, "dims agree with the published real rows");
  const auto c = complex_wedderburn(builtin_group("2T"));
  std::multiset<std::string> cnames;
  for (const auto& b : c.blocks) cnames.insert(block_name(b));
  o.need(cnames == std::multiset<std::string>{"C", "C", "C", "M3(C)", "M2(C)", "M2(C)", "M2(C)"},
         "complex 2T = 3C + M3(C) + 3M2(C)");
  o.info("real 2T = " + r.format());
  return o;
}

Outcome tensor() {
  Outcome o;
  const auto t = real_character_table(complex_character_table(builtin_group("2T")));
  const std::vector<std::string> labels = {"2", "3", "4H", "4C"};
  const std::vector<std::string> all = {"1", "2", "3", "4H", "4C"};
  const auto published = testing::reference_tensor_table();
  // Oracle: multiplicities from the published real rows alone.
  const auto prow = testing::reference_real_rows();
  const std::vector<long> sizes = {1, 1, 6, 8, 8};
  const auto inner = [&](const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
    CycScalar s;
    for (std::size_t c = 0; c < 5; ++c) s += CycScalar(sizes[c]) * a[c] * b[c].conj();
    return s * CycScalar(Rational(1, 24));
  };
  const auto oracle = [&](const std::vector<CycScalar>& chi) {
    std::string out;
    for (std::size_t r = 0; r < 5; ++r) {
      const CycScalar m = inner(chi, prow[r]) * inner(prow[r], prow[r]).inverse();
      for (long n = m.coord(0).get_num().get_si(); n > 0; --n) out += all[r];
    }
    return out;
  };
  const auto product = [&](const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
    std::vector<CycScalar> out;
    for (std::size_t c = 0; c < 5; ++c) out.push_back(a[c] * b[c]);
    return out;
  };
  std::size_t agree = 0, oracle_agree = 0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const std::string got = tensor_decompose(row_of(t, labels[a]), row_of(t, labels[b]), t).compact(t);
      const std::string ref = oracle(product(prow[a + 1], prow[b + 1]));
      oracle_agree += ref == got;
      if (got == published[a][b]) {
        ++agree;
      } else {
        o.need(false, labels[a] + "x" + labels[b] + ": computed " + got + ", published " + published[a][b]);
      }
    }
  }
  o.need(oracle_agree == 16, "library agrees with the row oracle");
  const auto one_two = character_sum(row_of(t, "1"), row_of(t, "2"));
  for (const auto& r : labels) {
    o.need(tensor_decompose(one_two, row_of(t, r), t) == tensor_decompose(row_of(t, "3"), row_of(t, r), t),
           "(1+2)x" + r + " = 3x" + r);
  }
  o.need(tensor_decompose(row_of(t, "3"), row_of(t, "4H"), t) == tensor_decompose(row_of(t, "3"), row_of(t, "4C"), t),
         "3x4H = 3x4C");
  const auto one_three = character_sum(row_of(t, "1"), row_of(t, "3"));
  const auto sq = tensor_decompose(one_three, one_three, t);
  o.need(sq == tensor_decompose(row_of(t, "4C"), row_of(t, "4C"), t) && sq.compact(t) == "1123333",
         "(1+3)x(1+3) = 4Cx4C = 1123333");
  o.info(str(agree) + "/16 published entries reproduced; row oracle agrees with computation on " +
         str(oracle_agree) + "/16");
  return o;
}

Outcome matrices() {
  Outcome o;
  const auto g = builtin_group("2T");
  const auto complex = complex_character_table(g);
  const auto real = real_character_table(complex);
  const std::vector<Quaternion> gens = {Quaternion::unit_i(), quaternion_w()};
  const std::vector<std::string> labels = {"1", "2", "3", "4H", "4C"};
  const std::map<std::string, std::size_t> reference_row = {
      {"2T.1", 0}, {"2T.2", 1}, {"2T.3", 2}, {"2T.4H", 3}, {"2T.4C", 4}};
  for (const auto& name : builtin_rep_names()) {
    const auto rep = builtin_rep(name);
    // Oracle: walk words in i, w and demand each quaternion gets one matrix.
    std::map<Quaternion, CycMatrix> image = {{Quaternion::one(), CycMatrix::identity(rep.dimension())}};
    std::vector<Quaternion> frontier = {Quaternion::one()};
    bool consistent = true;
    while (!frontier.empty() && consistent) {
      std::vector<Quaternion> next;
      for (const auto& q : frontier) {
        for (std::size_t k = 0; k < 2; ++k) {
          const Quaternion p = q * gens[k];
          const CycMatrix m = image.at(q) * rep.generator_images()[k];
          const auto [it, fresh] = image.emplace(p, m);
          if (fresh) {
            next.push_back(p);
          } else if (!(it->second == m)) {
            consistent = false;
          }
        }
      }
      frontier = std::move(next);
    }
    o.need(consistent && image.size() == 24, name + " is a homomorphism (oracle)");
    o.need(verify_homomorphism(rep), name + " is a homomorphism (library)");
    if (!consistent) continue;
    std::vector<CycScalar> traces;
    for (const auto& q : testing::real_column_elements()) traces.push_back(image.at(q).trace());
    if (const auto it = reference_row.find(name); it != reference_row.end()) {
      o.need(traces == testing::reference_real_rows()[it->second], name + " traces match the published row");
      o.need(rep_character(rep).values == row_of(real, labels[it->second]).values,
             name + " character matches the computed real table");
    } else {
      std::vector<CycScalar> full;
      for (const auto& q : testing::complex_column_elements()) full.push_back(image.at(q).trace());
      o.need(full == testing::reference_complex_rows()[4], name + " traces match the published 2-dim quaternionic row");
      o.need(std::any_of(complex.rows.begin(), complex.rows.end(),
                         [&](const Character& r) { return r.values == rep_character(rep).values; }),
             name + " character is a computed complex row");
    }
  }
  o.info(str(builtin_rep_names().size()) + " built-in representations");
  return o;
}

Outcome idempotents() {
  Outcome o;
  const Quaternion one = Quaternion::one(), i = Quaternion::unit_i(), j = Quaternion::unit_j(),
                   k = Quaternion::unit_k(), w = quaternion_w(), v = quaternion_v();
  const QElem e = unit(one), i2 = unit(i * i);
  const QElem s = unit(w) + unit(i * w) + unit(j * w) + unit(k * w) + unit(v) - unit(i * v) - unit(j * v) - unit(k * v);
  const Rational r24 = Rational(1) / 24, r8 = Rational(1) / 8, r12 = Rational(1) / 12;
  const QElem base = (e + i2) * (e + unit(i)) * (e + unit(j));
  const std::vector<std::pair<std::string, QElem>> named = {
      {"R", r24 * (base * (e + unit(w) + unit(v)))},
      {"C", r24 * (base * (Rational(2) * e - unit(w) - unit(v)))},
      {"M3(R)", r8 * ((e + i2) * (Rational(3) * e - unit(i) - unit(j) - unit(k)))},
      {"H", r12 * ((e - i2) * (Rational(2) * e - s))},
      {"M2(C)", r12 * ((e - i2) * (Rational(4) * e + s))},
  };
  const std::vector<std::size_t> dims = {1, 2, 9, 4, 8};
  const auto units = units_2t();
  const auto block_dim = [&](const QElem& x) {
    RationalSpan span;
    for (const auto& g : units) {
      const QElem y = x * unit(g);
      std::vector<Rational> vec;
      for (const auto& u : units) vec.push_back(y.count(u) ? y.at(u) : Rational(0));
      span.add(vec);
    }
    return span.size();
  };
  QElem total;
  for (std::size_t a = 0; a < named.size(); ++a) {
    const auto& [name, x] = named[a];
    o.need(x * x == x, name + " idempotent");
    o.need(x * unit(i) == unit(i) * x && x * unit(w) == unit(w) * x, name + " central");
    o.need(block_dim(x) == dims[a], name + " block dimension " + str(dims[a]));
    for (std::size_t b = a + 1; b < named.size(); ++b) o.need((x * named[b].second).empty(), name + " orthogonal");
    total = total + x;
  }
  o.need(total == e, "sum is e");
  // Cross-check against the library's expansions.
  const auto g = builtin_group("2T");
  const auto lib = tetrahedral_idempotents(g);
  for (std::size_t a = 0; a < named.size(); ++a) {
    bool same = lib[a].block == named[a].first;
    for (std::size_t x = 0; x < g->order() && same; ++x) {
      const Quaternion q = std::get<Quaternion>(g->payload(x));
      const Rational c = named[a].second.count(q) ? named[a].second.at(q) : Rational(0);
      same = lib[a].element.coeff(x) == CycScalar(c);
    }
    o.need(same, named[a].first + " matches the library expansion");
  }
  const QElem boson = Rational(1, 2) * (e + i2), fermion = Rational(1) / 2 * (e - i2);
  o.need(boson * boson == boson && fermion * fermion == fermion && (boson * fermion).empty(), "(e+-i^2)/2");
  o.need(block_dim(boson) == 12 && block_dim(fermion) == 12, "bosons/fermions 12+12");
  const QElem f1 = Rational(1) / 6 * (Rational(2) * e - s), f2 = Rational(1) / 6 * (Rational(4) * e + s);
  o.need(f1.at(one) == Rational(1) / 3 && f2.at(one) == Rational(2) / 3, "identity coefficients 1/3, 2/3");
  return o;
}

Outcome z3_toy() {
  Outcome o;
  const Quaternion one = Quaternion::one(), w = quaternion_w(), v = quaternion_v();
  const auto g = builtin_group("Z3");
  const auto lib = enumerate_idempotents_commutative(g);
  o.need(lib.size() == 4, "QZ3 has 4 idempotents (found " + str(lib.size()) + ")");
  std::set<QElem> found;
  for (const auto& x : lib) {
    QElem q;
    for (std::size_t k = 0; k < 3; ++k) q[std::get<Quaternion>(g->payload(k))] = x.coeff(k).coord(0);
    q = clean(q);
    o.need(q * q == q, "library idempotent squares to itself");
    found.insert(q);
  }
  const Rational third = Rational(1) / 3;
  o.need(found.count(third * (unit(one) + unit(v) + unit(w))) == 1, "(e+v+w)/3");
  o.need(found.count(third * (Rational(2) * unit(one) - unit(v) - unit(w))) == 1, "(2e-v-w)/3");
  // Brute force over small integer coefficients.
  std::set<QElem> integral;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        const QElem x = clean(qe({{one, a}, {w, b}, {v, c}}));
        if (x * x == x) integral.insert(x);
      }
  o.need(integral == std::set<QElem>{QElem{}, unit(one)}, "ZZ3 idempotents in [-3,3]^3 are 0 and e");
  const auto lib_int = integral_idempotent_check(g);
  o.need(lib_int.size() == 2, "library finds 2 integral idempotents");
  return o;
}

Outcome q8_decompose_check() {
  Outcome o;
  const Quaternion one = Quaternion::one(), i = Quaternion::unit_i(), j = Quaternion::unit_j(),
                   k = Quaternion::unit_k();
  const auto pm = [&](const Quaternion& q) { return unit(q) + unit(-q); };
  const auto mp = [&](const Quaternion& q) { return unit(q) - unit(-q); };
  const std::vector<std::pair<int, int>> lambdas = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  std::vector<QElem> basis;
  for (const auto& [li, lj] : lambdas) {
    basis.push_back(pm(one) + Rational(li) * pm(i) + Rational(lj) * pm(j) + Rational(li * lj) * pm(k));
  }
  for (const auto& q : {one, i, j, k}) basis.push_back(mp(q));
  RationalSpan span;
  for (const auto& b : basis) {
    std::vector<Rational> vec;
    for (const auto& u : units_q8()) vec.push_back(b.count(u) ? b.at(u) : Rational(0));
    span.add(vec);
  }
  o.need(span.size() == 8, "basis change invertible");
  std::set<std::pair<Rational, Rational>> pairs;
  const auto d = q8_decompose(AlgebraElement::identity(builtin_group("Q8")));
  for (std::size_t n = 0; n < 4; ++n) {
    const auto [li, lj] = lambdas[n];
    const Rational charge = Rational(lj - li) / 2, isospin = Rational(lj) / 2;
    pairs.insert({charge, isospin});
    o.need(d.charges[n].charge == charge && d.charges[n].weak_isospin == isospin,
           std::string(Q8Decomposition::kNames[n]) + " charge/isospin matches the library");
  }
  const Rational h = Rational(1) / 2;
  o.need(pairs == std::set<std::pair<Rational, Rational>>{{0, h}, {-1, -h}, {1, h}, {0, -h}}, "four distinct pairs");
  // e = (1a+1b+1c+1d)/8 + t/2.
  QElem rebuilt = h * basis[4];
  for (std::size_t n = 0; n < 4; ++n) rebuilt = rebuilt + Rational(1) / 8 * basis[n];
  o.need(rebuilt == unit(one), "e = (1a+1b+1c+1d)/8 + t/2");
  return o;
}

Outcome aut() {
  Outcome o;
  // An automorphism of Q8 is fixed by the images of i and j: order 4, not +-each other.
  const auto q8 = units_q8();
  std::vector<std::pair<Quaternion, Quaternion>> autos;
  for (const auto& a : q8)
    for (const auto& b : q8)
      if (quaternion_order(a) == 4 && quaternion_order(b) == 4 && !(a == b) && !(a == -b)) autos.push_back({a, b});
  const auto apply = [&](const std::pair<Quaternion, Quaternion>& f, const Quaternion& x) {
    // x = s * i^p * j^q for units; evaluate via the images.
    for (int s : {1, -1})
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          Quaternion word = Quaternion{s, 0, 0, 0};
          Quaternion image = Quaternion{s, 0, 0, 0};
          if (p) word = word * Quaternion::unit_i(), image = image * f.first;
          if (q) word = word * Quaternion::unit_j(), image = image * f.second;
          if (word == x) return image;
        }
    return Quaternion::one();
  };
  std::map<std::size_t, std::size_t> census;
  std::set<std::vector<Quaternion>> inner;
  for (const auto& f : autos) {
    std::size_t n = 1;
    auto cur = f;
    while (!(cur.first == Quaternion::unit_i() && cur.second == Quaternion::unit_j())) {
      cur = {apply(f, cur.first), apply(f, cur.second)};
      ++n;
    }
    ++census[n];
  }
  for (const auto& x : q8) {
    std::vector<Quaternion> m;
    for (const auto& y : q8) m.push_back(x * y * x.conj());
    inner.insert(m);
  }
  const std::map<std::size_t, std::size_t> expected = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  o.need(autos.size() == 24, "oracle order 24");
  o.need(inner.size() == 4, "oracle inner order 4");
  o.need(census == expected, "oracle census {1:1,2:9,3:8,4:6}");
  const auto lib = automorphism_group(*builtin_group("Q8"));
  o.need(lib.group->order() == 24 && lib.inner_count == 4 && lib.order_census() == expected, "library agrees");
  return o;
}

Outcome dirac() {
  Outcome o;
  const CycScalar I = cyc_i();
  const Mat2 id = CycMatrix::identity(2);
  const Mat2 s1 = {{0L, 1L}, {1L, 0L}}, s2 = {{CycScalar(), -I}, {I, CycScalar()}}, s3 = {{1L, 0L}, {0L, -1L}};
  const Mat2 is2 = I * s2;
  const std::vector<CycMatrix> gam = {realize(id, s1), realize(s1, is2), realize(s2, is2), realize(s3, is2)};
  const auto lib = default_gammas();
  for (std::size_t a = 0; a < 4; ++a) o.need(lib.gammas[a].realized == gam[a], "gamma" + str(a) + " realization");
  const std::vector<int> eta = {1, -1, -1, -1};
  const CycMatrix id4 = CycMatrix::identity(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const CycMatrix expect = a == b ? CycScalar(2L * eta[a]) * id4 : CycMatrix(4, 4);
      o.need(gam[a] * gam[b] + gam[b] * gam[a] == expect, "anticommutator " + str(a) + str(b));
    }
  try {
    o.need(clifford_verify(lib).format() == "(+,-,-,-)", "library signature (+,-,-,-)");
  } catch (const Error& e) {
    o.need(false, e.what());
  }
  // Right-hand parts of i gamma0 and i gamma1 gamma2 gamma3.
  const std::size_t right = bfs_closure({I * s1, I * s2});
  o.need(right == 8 && right_mult_group(lib).order() == 8, "right multiplication group has order 8");
  o.need(class_profile(right_mult_group(lib)) == class_profile(*builtin_group("Q8")), "right group has Q8 profile");
  const CycMatrix g12 = gam[1] * gam[2], g23 = gam[2] * gam[3], g01 = gam[0] * gam[1];
  const std::size_t u2 = lie_dim_oracle({I * id4, g12, g23});
  o.need(u2 == 4 && lie_closure_dim({I * id4, g12, g23}) == 4, "u(2) closure dimension 4");
  const std::size_t sl = lie_dim_oracle({I * g12, I * g23});
  o.need(sl == 6, "closure of {i g1g2, i g2g3} has dimension 6 (oracle " + str(sl) + ", library " +
                      str(lie_closure_dim({I * g12, I * g23})) + ")");
  CycMatrix products(16, 16);
  for (unsigned mask = 0; mask < 16; ++mask) {
    CycMatrix p = id4;
    for (std::size_t a = 0; a < 4; ++a)
      if (mask & (1u << a)) p = p * gam[a];
    for (std::size_t e = 0; e < 16; ++e) products(e, mask) = p.entries()[e];
  }
  o.need(matrix_rank(products) == 16, "16 gamma products independent");
  o.info("real closure of {i g1g2, i g2g3} = " + str(sl) + ", with g1g2, g2g3 added = " +
         str(lie_dim_oracle({I * g12, I * g23, g12, g23})) + ", Dirac spin {g0g1,g1g2,g2g3} = " +
         str(lie_dim_oracle({g01, g12, g23})));
  return o;
}

Outcome closure() {
  Outcome o;
  const Quaternion i = Quaternion::unit_i(), w = quaternion_w();
  const std::size_t order = bfs_closure(
      {quaternion_action(i, true), quaternion_action(w, true), quaternion_action(i, false), quaternion_action(w, false)});
  o.need(order == 288, "{L(q), R(q)} closure is 288 (oracle " + str(order) + ")");
  for (const auto& s : f4_candidate_sets()) {
    const auto n = matrix_group_closure(s.generators, kDefaultClosureCap, false).order;
    if (s.blocking) o.need(n == s.expected_order, s.name + " library closure");
    o.info(s.name + " = " + str(n) + (s.blocking ? "" : " (non-blocking)"));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(7);
  bool axioms = true;
  for (int t = 0; t < 1000; ++t) {
    const CycScalar a = testing::random_scalar(rng), b = testing::random_scalar(rng), c = testing::random_scalar(rng);
    axioms = axioms && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
             a * b == b * a && (a.is_zero() || a * a.inverse() == CycScalar(1L));
  }
  o.need(axioms, "field axioms on 1000 samples");
  for (const auto* name : {"Q8", "2T", "Z3", "Z4", "Z2", "1"}) {
    const auto g = builtin_group(name);
    const auto t = complex_character_table(g);
    // Oracle orthogonality by summing over elements rather than classes.
    bool ortho = true;
    long squares = 0;
    for (std::size_t a = 0; a < t.rows.size(); ++a) {
      squares += t.rows[a].dimension() * t.rows[a].dimension();
      for (std::size_t b = 0; b < t.rows.size(); ++b) {
        CycScalar s;
        for (std::size_t x = 0; x < g->order(); ++x)
          s += t.rows[a].values[g->class_of(x)] * t.rows[b].values[g->class_of(x)].conj();
        ortho = ortho && s == CycScalar(a == b ? static_cast<long>(g->order()) : 0L);
      }
    }
    o.need(ortho, std::string(name) + " row orthogonality");
    o.need(squares == static_cast<long>(g->order()), std::string(name) + " sum of squared degrees");
    AlgebraElement total = AlgebraElement::zero(g, Ring::kCyc);
    for (const auto& e : central_idempotents(real_character_table(t))) total += e;
    o.need(total == AlgebraElement::identity(g), std::string(name) + " idempotents sum to e");
  }
  bool rn = true;
  for (int t = 0; t < 30; ++t) {
    const auto m = testing::random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 5, true);
    const auto ker = matrix_kernel(m);
    rn = rn && matrix_rank(m) + ker.cols() == m.cols();
  }
  o.need(rn, "rank-nullity");
  VerifyOptions opts;
  opts.only = {"property-suites"};
  o.need(verify_all(opts).ok(), "library property suite");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"classes-2.2", classes},
      {"chartable-complex-2.2", complex_table},
      {"chartable-real-2.2", real_table},
      {"wedderburn", wedderburn},
      {"tensor-2.3", tensor},
      {"matrices-2.4", matrices},
      {"idempotents-2.5", idempotents},
      {"z3-toy-2.5", z3_toy},
      {"q8-decompose-1.3", q8_decompose_check},
      {"aut-1.4", aut},
      {"dirac-3.1", dirac},
      {"closure-1.4", closure},
      {"property-suites", properties},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::string notes;
    for (const auto& s : o.notes) notes += (notes.empty() ? "" : "; ") + s;
    std::cout << "criterion " << (n + 1 < 10 ? " " : "") << n + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[n].first << "  " << notes << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
