#include "fgre/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fgre/error.hpp"
#include "fgre/linalg.hpp"

namespace fgre {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "?";
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

Json VerificationReport::to_json() const {
  Json j;
  Json list = Json::array();
  std::map<std::string, int> counts = {{"PASS", 0}, {"FAIL", 0}, {"SKIP", 0}};
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["detail"] = c.detail;
    item["elapsed_ms"] = c.elapsed_ms;
    list.push_back(std::move(item));
    ++counts[to_string(c.status)];
  }
  j["checks"] = list;
  j["summary"] = {{"pass", counts["PASS"]}, {"fail", counts["FAIL"]}, {"skip", counts["SKIP"]}};
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  int failed = 0;
  for (const auto& c : checks) {
    out << to_string(c.status) << "  " << c.name << std::string(width - c.name.size(), ' ') << "  " << c.detail;
    out << "  [" << static_cast<long>(c.elapsed_ms) << " ms]\n";
    failed += c.status == CheckStatus::kFail;
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

namespace {

/// Collects sub-results; the check passes only if every sub-result holds.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) {
      ++passed_;
    } else {
      failures_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }

  CheckResult result(const std::string& name) const {
    CheckResult r;
    r.name = name;
    r.status = failures_.empty() ? CheckStatus::kPass : CheckStatus::kFail;
    std::string detail;
    if (failures_.empty()) {
      detail = std::to_string(passed_) + " sub-checks ok";
    } else {
      detail = std::to_string(failures_.size()) + " of " + std::to_string(passed_ + failures_.size()) +
               " sub-checks failed: ";
      for (std::size_t k = 0; k < failures_.size(); ++k) detail += (k ? "; " : "") + failures_[k];
    }
    for (const auto& n : notes_) detail += " | " + n;
    r.detail = detail;
    return r;
  }

 private:
  std::size_t passed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "]";
}

// Published values for 2T. Columns of the complex table: 1, -1, i, w, -w, v, -v;
// of the real table: 1, -1, i, w, -w.

std::vector<Quaternion> complex_columns() {
  const Quaternion w = quaternion_w(), v = quaternion_v();
  return {Quaternion::one(), -Quaternion::one(), Quaternion::unit_i(), w, -w, v, -v};
}

std::vector<std::vector<CycScalar>> published_complex_rows() {
  const CycScalar w = cyc_omega(), wb = cyc_omega().conj();
  return {{1L, 1L, 1L, 1L, 1L, 1L, 1L},   {1L, 1L, 1L, w, w, wb, wb},     {1L, 1L, 1L, wb, wb, w, w},
          {3L, 3L, -1L, 0L, 0L, 0L, 0L},  {2L, -2L, 0L, -1L, 1L, -1L, 1L}, {2L, -2L, 0L, -w, w, -wb, wb},
          {2L, -2L, 0L, -wb, wb, -w, w}};
}

std::map<std::string, std::vector<CycScalar>> published_real_rows() {
  return {{"1", {1L, 1L, 1L, 1L, 1L}},
          {"2", {2L, 2L, 2L, -1L, -1L}},
          {"3", {3L, 3L, -1L, 0L, 0L}},
          {"4H", {4L, -4L, 0L, -2L, 2L}},
          {"4C", {4L, -4L, 0L, 1L, -1L}}};
}

const std::vector<std::string> kTensorLabels = {"2", "3", "4H", "4C"};

std::vector<std::vector<std::string>> published_tensor_table() {
  return {{"13", "123", "4C4C", "4H4C"},
          {"123", "1233", "4H4C4C", "4H4C4C"},
          {"4C4C", "4H4C4C", "11113333", "223333"},
          {"4H4C", "4H4C4C", "223333", "1123333"}};
}

std::vector<CycScalar> values_at(const Character& chi, const FiniteGroup& g, const std::vector<Quaternion>& at) {
  std::vector<CycScalar> out;
  for (const auto& q : at) out.push_back(chi.values[g.class_of(*g.find_quaternion(q))]);
  return out;
}

const Character& row(const CharacterTable& t, const std::string& label) {
  const auto idx = t.find_label(label);
  if (!idx) throw Error(ErrorKind::kInternalInconsistency, "no row labelled " + label);
  return t.rows[*idx];
}

CharacterTable real_2t() { return real_character_table(complex_character_table(builtin_group("2T"))); }

CheckResult check_classes() {
  Findings f;
  const auto g = builtin_group("2T");
  const auto profile = class_profile(*g);
  f.expect(profile.sizes == std::vector<std::size_t>{1, 1, 6, 4, 4, 4, 4}, "class sizes " + join(profile.sizes));
  f.expect(profile.orders == std::vector<std::size_t>{1, 2, 4, 3, 3, 6, 6}, "element orders " + join(profile.orders));
  const Quaternion one = Quaternion::one(), i = Quaternion::unit_i(), j = Quaternion::unit_j(),
                   k = Quaternion::unit_k(), w = quaternion_w(), v = quaternion_v();
  const std::vector<std::pair<std::string, std::vector<Quaternion>>> published = {
      {"1", {one}},
      {"-1", {-one}},
      {"+-i,+-j,+-k", {i, -i, j, -j, k, -k}},
      {"w,wi,wj,wk", {w, w * i, w * j, w * k}},
      {"v,-vi,-vj,-vk", {v, -(v * i), -(v * j), -(v * k)}},
      {"-w,-wi,-wj,-wk", {-w, -(w * i), -(w * j), -(w * k)}},
      {"-v,vi,vj,vk", {-v, v * i, v * j, v * k}},
  };
  // Published classes are matched as sets; the canonical class order may differ.
  for (std::size_t c = 0; c < published.size(); ++c) {
    std::vector<std::size_t> members;
    for (const auto& q : published[c].second) members.push_back(*g->find_quaternion(q));
    std::sort(members.begin(), members.end());
    const bool found = std::any_of(g->classes().begin(), g->classes().end(), [&](const ConjugacyClass& cl) {
      return cl.members == members && cl.element_order == g->element_order(members.front());
    });
    f.expect(found, "class " + published[c].first);
  }
  return f.result("classes-2.2");
}

CheckResult check_complex_table() {
  Findings f;
  const auto g = builtin_group("2T");
  const auto t = complex_character_table(g);
  f.expect(t.rows.size() == 7, "row count " + std::to_string(t.rows.size()));
  std::multiset<std::vector<CycScalar>> computed;
  for (const auto& r : t.rows) computed.insert(values_at(r, *g, complex_columns()));
  const auto published = published_complex_rows();
  for (std::size_t r = 0; r < published.size(); ++r) {
    f.expect(computed.count(published[r]) == 1, "published row " + std::to_string(r + 1) + " not found");
  }
  f.expect(check_orthogonality(t), "orthogonality");
  return f.result("chartable-complex-2.2");
}

CheckResult check_real_table() {
  Findings f;
  const auto g = builtin_group("2T");
  const auto t = real_2t();
  const auto all_columns = complex_columns();
  const std::vector<Quaternion> columns(all_columns.begin(), all_columns.begin() + 5);
  f.expect(t.rows.size() == 5, "row count " + std::to_string(t.rows.size()));
  for (const auto& [label, values] : published_real_rows()) {
    const auto idx = t.find_label(label);
    f.expect(idx && values_at(t.rows[*idx], *g, columns) == values, "row " + label);
  }
  f.expect(row(t, "4H").indicator == -1 && row(t, "4C").indicator == 0, "4H quaternionic and 4C complex");
  f.expect(check_orthogonality(t), "orthogonality with Schur norms");
  return f.result("chartable-real-2.2");
}

CheckResult check_wedderburn() {
  Findings f;
  const auto q8 = real_wedderburn(builtin_group("Q8"));
  f.expect(q8.format() == "4R + H", "real Q8 = " + q8.format());
  const auto t = real_wedderburn(builtin_group("2T"));
  std::multiset<std::string> names;
  std::vector<std::size_t> dims;
  for (const auto& b : t.blocks) {
    names.insert(block_name(b));
    dims.push_back(b.real_dimension);
  }
  f.expect(names == std::multiset<std::string>{"R", "C", "H", "M2(C)", "M3(R)"}, "real 2T = " + t.format());
  f.expect(dims == std::vector<std::size_t>{1, 2, 4, 8, 9}, "real 2T dims " + join(dims));
  const auto c = complex_wedderburn(builtin_group("2T"));
  std::multiset<std::string> cnames;
  for (const auto& b : c.blocks) cnames.insert(block_name(b));
  f.expect(cnames == std::multiset<std::string>{"C", "C", "C", "M3(C)", "M2(C)", "M2(C)", "M2(C)"},
           "complex 2T = " + c.format());
  f.note("real 2T = " + t.format() + "; complex 2T = " + c.format());
  return f.result("wedderburn");
}

CheckResult check_tensor() {
  Findings f;
  const auto t = real_2t();
  const auto published = published_tensor_table();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const std::string got = tensor_decompose(row(t, kTensorLabels[a]), row(t, kTensorLabels[b]), t).compact(t);
      f.expect(got == published[a][b],
               kTensorLabels[a] + "x" + kTensorLabels[b] + " = " + got + ", published " + published[a][b]);
    }
  }
  const auto one_two = character_sum(row(t, "1"), row(t, "2"));
  for (const auto& r : kTensorLabels) {
    const auto lhs = tensor_decompose(one_two, row(t, r), t), rhs = tensor_decompose(row(t, "3"), row(t, r), t);
    f.expect(lhs == rhs, "(1+2)x" + r + " = " + lhs.compact(t) + " but 3x" + r + " = " + rhs.compact(t));
  }
  f.expect(tensor_decompose(row(t, "3"), row(t, "4H"), t) == tensor_decompose(row(t, "3"), row(t, "4C"), t),
           "3x4H = 3x4C");
  const auto one_three = character_sum(row(t, "1"), row(t, "3"));
  const auto sq = tensor_decompose(one_three, one_three, t);
  f.expect(sq == tensor_decompose(row(t, "4C"), row(t, "4C"), t), "(1+3)x(1+3) = 4Cx4C");
  f.expect(sq.compact(t) == "1123333", "(1+3)x(1+3) = " + sq.compact(t));
  return f.result("tensor-2.3");
}

CheckResult check_matrices(const std::string& corrupt) {
  Findings f;
  const auto g = builtin_group("2T");
  const auto complex = complex_character_table(g);
  const auto real = real_character_table(complex);
  const std::map<std::string, std::string> rows = {
      {"2T.1", "1"}, {"2T.2", "2"}, {"2T.3", "3"}, {"2T.4H", "4H"}, {"2T.4C", "4C"}};
  for (const auto& name : builtin_rep_names()) {
    MatrixRep rep = builtin_rep(name);
    if (name == corrupt) {
      auto images = rep.generator_images();
      CycMatrix& w = images.back();
      w(0, 0) = -w(0, 0);
      if (w(0, 0).is_zero()) w(0, 0) = CycScalar(1L);
      rep = MatrixRep(name, g, rep.generators(), images);
    }
    const bool hom = verify_homomorphism(rep);
    f.expect(hom, name + " is not a homomorphism");
    if (!hom) continue;
    const auto chi = rep_character(rep);
    if (const auto it = rows.find(name); it != rows.end()) {
      f.expect(chi.values == row(real, it->second).values, name + " character differs from row " + it->second);
    } else {
      const bool found = std::any_of(complex.rows.begin(), complex.rows.end(),
                                     [&](const Character& r) { return r.values == chi.values && r.indicator == -1; });
      f.expect(found, name + " character is not the quaternionic degree-2 row");
      f.expect(reps_equivalent(realify(rep), builtin_rep("2T.4H")), name + " realified is not 4H");
    }
  }
  return f.result("matrices-2.4");
}

CheckResult check_idempotents() {
  Findings f;
  const auto g = builtin_group("2T");
  const auto named = tetrahedral_idempotents(g);
  const std::vector<std::size_t> expected_dims = {1, 2, 9, 4, 8};
  AlgebraElement total = AlgebraElement::zero(g, Ring::kRat);
  const auto real = real_2t();
  const auto computed = central_idempotents(real);
  const std::map<std::string, std::string> row_for = {
      {"R", "1"}, {"C", "2"}, {"M3(R)", "3"}, {"H", "4H"}, {"M2(C)", "4C"}};
  for (std::size_t a = 0; a < named.size(); ++a) {
    const auto& e = named[a].element;
    const auto report = verify_idempotent(e);
    f.expect(report.idempotent, named[a].block + " idempotent");
    f.expect(report.central, named[a].block + " central");
    if (report.idempotent) {
      const auto dim = block_dimension(e);
      f.expect(dim == expected_dims[a], named[a].block + " block dimension " + std::to_string(dim));
    }
    f.expect(e == computed[*real.find_label(row_for.at(named[a].block))],
             named[a].block + " differs from the computed block idempotent");
    for (std::size_t b = 0; b < named.size(); ++b) {
      if (a != b) f.expect((e * named[b].element).is_zero(), named[a].block + " x " + named[b].block + " != 0");
    }
    total += e;
  }
  f.expect(total == AlgebraElement::identity(g), "sum is not e");
  const auto boson = boson_projection(g), fermion = fermion_projection(g);
  f.expect(block_dimension(boson) == 12 && block_dimension(fermion) == 12, "boson/fermion dims 12+12");
  f.expect(boson + fermion == AlgebraElement::identity(g), "boson + fermion = e");
  const auto e = AlgebraElement::identity(g, Ring::kRat);
  const auto s = order_three_sum(g);
  f.expect((CycScalar(Rational(1, 6)) * (CycScalar(2L) * e - s)).coeff(0) == CycScalar(Rational(1, 3)),
           "identity coefficient of (2e-s)/6");
  f.expect((CycScalar(Rational(1, 6)) * (CycScalar(4L) * e + s)).coeff(0) == CycScalar(Rational(2, 3)),
           "identity coefficient of (4e+s)/6");
  return f.result("idempotents-2.5");
}

CheckResult check_z3() {
  Findings f;
  const auto g = builtin_group("Z3");
  const auto all = enumerate_idempotents_commutative(g);
  f.expect(all.size() == 4, "QZ3 has " + std::to_string(all.size()) + " idempotents");
  const auto e = AlgebraElement::identity(g, Ring::kRat);
  const auto w = AlgebraElement::of(g, quaternion_w()), v = AlgebraElement::of(g, quaternion_v());
  const CycScalar third(Rational(1, 3));
  const auto has = [&](const AlgebraElement& x) { return std::find(all.begin(), all.end(), x) != all.end(); };
  f.expect(has(third * (e + v + w)), "(e+v+w)/3 missing");
  f.expect(has(third * (CycScalar(2L) * e - v - w)), "(2e-v-w)/3 missing");
  const auto integral = integral_idempotent_check(g);
  f.expect(integral.size() == 2 && integral[0].is_zero() && integral[1] == e, "ZZ3 idempotents are not {0, e}");
  return f.result("z3-toy-2.5");
}

CheckResult check_q8_decompose() {
  Findings f;
  const auto g = builtin_group("Q8");
  const auto basis = q8_basis(g);
  CycMatrix m(8, 8);
  for (std::size_t b = 0; b < 8; ++b) {
    for (std::size_t x = 0; x < 8; ++x) m(x, b) = basis[b].coeff(x);
  }
  f.expect(matrix_rank(m) == 8, "basis change is singular");
  const auto d = q8_decompose(AlgebraElement::identity(g));
  std::set<std::pair<Rational, Rational>> pairs;
  for (const auto& q : d.charges) pairs.insert({q.charge, q.weak_isospin});
  const std::set<std::pair<Rational, Rational>> expected = {
      {0, Rational(1, 2)}, {-1, Rational(-1, 2)}, {1, Rational(1, 2)}, {0, Rational(-1, 2)}};
  f.expect(pairs == expected, "charge/isospin pairs");
  const std::array<CycScalar, 8> raw_one = {CycScalar(Rational(1, 8)), CycScalar(Rational(1, 8)),
                                            CycScalar(Rational(1, 8)), CycScalar(Rational(1, 8)),
                                            CycScalar(Rational(1, 2)), 0L, 0L, 0L};
  f.expect(d.raw == raw_one, "coordinates of 1");
  f.expect(q8_reconstruct(g, d.raw) == AlgebraElement::identity(g), "reconstruction of 1");
  return f.result("q8-decompose-1.3");
}

CheckResult check_aut() {
  Findings f;
  const auto aut = automorphism_group(*builtin_group("Q8"));
  f.expect(aut.group->order() == 24, "|Aut(Q8)| = " + std::to_string(aut.group->order()));
  f.expect(aut.inner_count == 4, "inner automorphisms " + std::to_string(aut.inner_count));
  const std::map<std::size_t, std::size_t> census = {{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  std::string got;
  for (const auto& [o, c] : aut.order_census()) got += std::to_string(o) + ":" + std::to_string(c) + " ";
  f.expect(aut.order_census() == census, "order census " + got);
  const auto s4 = group_from_permutations("S4", {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)});
  f.expect(class_profile(*aut.group) == class_profile(s4), "class profile differs from Sym(4)");
  return f.result("aut-1.4");
}

CheckResult check_dirac() {
  Findings f;
  const auto gs = default_gammas();
  try {
    const auto sig = clifford_verify(gs);
    f.expect(sig.squares == std::vector<int>{1, -1, -1, -1}, "signature " + sig.format());
  } catch (const Error& e) {
    f.expect(false, e.what());
  }
  const auto right = right_mult_group(gs);
  f.expect(right.order() == 8, "right group order " + std::to_string(right.order()));
  f.expect(class_profile(right) == class_profile(*builtin_group("Q8")), "right group is not Q8");
  const auto& g = gs.gammas;
  const CycScalar i = cyc_i();
  const auto g12 = compose(g[1], g[2]).realized, g23 = compose(g[2], g[3]).realized;
  const auto g01 = compose(g[0], g[1]).realized;
  const std::size_t u2 = lie_closure_dim({i * CycMatrix::identity(4), g12, g23});
  f.expect(u2 == 4, "closure of {i, g1g2, g2g3} has dimension " + std::to_string(u2));
  const std::vector<CycMatrix> hermitian = {i * g12, i * g23};
  const std::size_t sl = lie_closure_dim(hermitian);
  f.expect(sl == 6, "closure of {i g1g2, i g2g3} has dimension " + std::to_string(sl) + ", expected 6");
  const std::size_t complexified = lie_closure_dim({i * g12, i * g23, g12, g23});
  const std::size_t dirac = lie_closure_dim({g01, g12, g23});
  const std::size_t joint = joint_closure_dim(hermitian, {g01, g12, g23});
  f.expect(dirac == 6, "Dirac spin closure has dimension " + std::to_string(dirac));
  f.expect(joint > 6, "joint span " + std::to_string(joint));
  f.expect(gamma_product_rank(gs) == 16, "gamma products not independent");
  f.note("real closure of {i g1g2, i g2g3} = " + std::to_string(sl) + ", with i-multiples = " +
         std::to_string(complexified) + ", joint span with Dirac spin = " + std::to_string(joint));
  return f.result("dirac-3.1");
}

CheckResult check_closure(std::size_t cap) {
  Findings f;
  for (const auto& s : f4_candidate_sets()) {
    std::string got;
    bool ok = false;
    try {
      const auto c = matrix_group_closure(s.generators, cap, false);
      got = std::to_string(c.order);
      ok = c.order == s.expected_order;
    } catch (const Error& e) {
      got = e.what();
    }
    if (s.blocking) {
      f.expect(ok, s.name + " closure " + got + ", expected " + std::to_string(s.expected_order));
    }
    f.note(s.name + ": " + got + (s.blocking ? "" : " (non-blocking, expected " + std::to_string(s.expected_order) + ")"));
  }
  return f.result("closure-1.4");
}

CycScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), zero(0, 3);
  std::array<Rational, CycScalar::kDegree> c;
  for (auto& x : c) x = zero(rng) == 0 ? Rational(0) : Rational(num(rng)) / den(rng);
  return CycScalar::from_coords(c);
}

CheckResult check_properties() {
  Findings f;
  std::vector<GroupPtr> groups;
  for (const auto* name : {"Q8", "2T", "Z3", "Z4", "Z2", "1"}) groups.push_back(builtin_group(name));
  groups.push_back(std::make_shared<const FiniteGroup>(
      group_from_permutations("S4", {parse_cycles("(0 1)", 4), parse_cycles("(0 1 2 3)", 4)})));
  groups.push_back(std::make_shared<const FiniteGroup>(
      group_from_permutations("D8", {parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 2)", 4)})));
  for (const auto& g : groups) {
    const auto complex = complex_character_table(g);
    const auto real = real_character_table(complex);
    f.expect(check_orthogonality(complex), g->name() + " complex orthogonality");
    f.expect(check_orthogonality(real), g->name() + " real orthogonality");
    std::size_t sum = 0;
    for (const auto& r : complex.rows) sum += static_cast<std::size_t>(r.dimension() * r.dimension());
    f.expect(sum == g->order(), g->name() + " sum of squared degrees");
    f.expect(real_wedderburn(complex).total_real_dimension() == g->order(), g->name() + " real block dimensions");
    const auto ids = central_idempotents(real);
    AlgebraElement total = AlgebraElement::zero(g, Ring::kCyc);
    bool orthogonal = true;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      total += ids[a];
      for (std::size_t b = a + 1; b < ids.size(); ++b) orthogonal = orthogonal && (ids[a] * ids[b]).is_zero();
    }
    f.expect(total == AlgebraElement::identity(g) && orthogonal, g->name() + " idempotent completeness");
  }

  std::mt19937 rng(20240601);
  bool axioms = true;
  for (int t = 0; t < 1000 && axioms; ++t) {
    const CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    axioms = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
             a * b == b * a && a + b == b + a && a - a == CycScalar();
    if (!a.is_zero()) axioms = axioms && a * a.inverse() == CycScalar(1L);
    axioms = axioms && (a * b).conj() == a.conj() * b.conj();
  }
  f.expect(axioms, "field axioms on random samples");

  bool rank_nullity = true;
  std::uniform_int_distribution<int> dim(1, 5), sparse(0, 2);
  for (int t = 0; t < 40 && rank_nullity; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    CycMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = sparse(rng) == 0 ? random_scalar(rng) : CycScalar();
    }
    const auto kernel = matrix_kernel(m);
    rank_nullity = matrix_rank(m) + kernel.cols() == cols && (kernel.cols() == 0 || (m * kernel).is_zero());
  }
  f.expect(rank_nullity, "rank-nullity");
  return f.result("property-suites");
}

}  // namespace

std::vector<std::string> check_names() {
  return {"classes-2.2",     "chartable-complex-2.2", "chartable-real-2.2", "wedderburn", "tensor-2.3",
          "matrices-2.4",    "idempotents-2.5",       "z3-toy-2.5",         "q8-decompose-1.3",
          "aut-1.4",         "dirac-3.1",             "closure-1.4",        "property-suites"};
}

VerificationReport verify_all(const VerifyOptions& options) {
  const auto names = check_names();
  for (const auto& n : options.only) {
    if (std::find(names.begin(), names.end(), n) == names.end()) {
      throw Error(ErrorKind::kUnknownName, "no check named '" + n + "'");
    }
  }
  const std::map<std::string, std::function<CheckResult()>> runners = {
      {"classes-2.2", check_classes},
      {"chartable-complex-2.2", check_complex_table},
      {"chartable-real-2.2", check_real_table},
      {"wedderburn", check_wedderburn},
      {"tensor-2.3", check_tensor},
      {"matrices-2.4", [&] { return check_matrices(options.corrupt_rep); }},
      {"idempotents-2.5", check_idempotents},
      {"z3-toy-2.5", check_z3},
      {"q8-decompose-1.3", check_q8_decompose},
      {"aut-1.4", check_aut},
      {"dirac-3.1", check_dirac},
      {"closure-1.4", [&] { return check_closure(options.cap); }},
      {"property-suites", check_properties},
  };
  VerificationReport report;
  for (const auto& name : names) {
    if (!options.only.empty() && !options.only.contains(name)) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = runners.at(name)();
    } catch (const Error& e) {
      r.name = name;
      r.status = CheckStatus::kFail;
      r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace fgre
