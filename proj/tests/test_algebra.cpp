#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fgre/algebra.hpp"
#include "fgre/builtins.hpp"
#include "fgre/error.hpp"
#include "random_scalars.hpp"

using namespace fgre;

namespace {

AlgebraElement el(const GroupPtr& g, const Quaternion& q) { return AlgebraElement::of(g, q).with_ring(Ring::kRat); }

CycScalar frac(long a, long b) { return CycScalar(Rational(a) / b); }

/// Block idempotent of the real table row with the given label.
AlgebraElement block(const GroupPtr& g, const std::string& label) {
  const auto t = real_character_table(complex_character_table(g));
  return central_idempotents(t).at(*t.find_label(label));
}

}  // namespace

TEST_CASE("algebra_mul basics") {
  const auto g = builtin_group("2T");
  const auto e = AlgebraElement::identity(g);
  const auto s = order_three_sum(g);
  CHECK(algebra_mul(e, s) == s);
  CHECK(algebra_mul(s, e) == s);
  const auto q8 = builtin_group("Q8");
  const auto i = Quaternion::unit_i();
  const auto boson = frac(1, 2) * (el(q8, Quaternion::one()) + el(q8, i * i));
  CHECK(boson * boson == boson);
  CHECK(boson == boson_projection(q8));
  // ring join
  CHECK((AlgebraElement::identity(q8) * boson).ring() == Ring::kRat);
  CHECK_THROWS_AS(AlgebraElement(q8, Ring::kInt, std::vector<CycScalar>(8, frac(1, 2))), Error);
  CHECK_THROWS_AS(AlgebraElement(q8, Ring::kInt, std::vector<CycScalar>(3)), Error);
}

TEST_CASE("algebra_mul is associative and matches the quaternion product") {
  const auto g = builtin_group("2T");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-3, 3);
  const auto random_element = [&] {
    std::vector<CycScalar> c(g->order());
    for (auto& x : c) x = CycScalar(coef(rng));
    return AlgebraElement(g, Ring::kInt, c);
  };
  for (int t = 0; t < 10; ++t) {
    const auto a = random_element(), b = random_element(), c = random_element();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  // basis products agree with quaternion multiplication of the payloads
  for (std::size_t x = 0; x < g->order(); ++x) {
    for (std::size_t y = 0; y < g->order(); ++y) {
      const auto& px = std::get<Quaternion>(g->payload(x));
      const auto& py = std::get<Quaternion>(g->payload(y));
      CHECK(AlgebraElement::basis(g, x) * AlgebraElement::basis(g, y) == AlgebraElement::of(g, px * py));
    }
  }
}

TEST_CASE("s is the sum of the elements of order 3") {
  const auto g = builtin_group("2T");
  std::vector<CycScalar> expected(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) expected[x] = CycScalar(g->element_order(x) == 3 ? 1L : 0L);
  CHECK(order_three_sum(g).coeffs() == expected);
}

TEST_CASE("central idempotents are a complete orthogonal family") {
  for (const auto* name : {"Q8", "2T", "Z3", "Z4", "1"}) {
    const auto g = builtin_group(name);
    const auto complex = complex_character_table(g);
    for (const auto& table : {complex, real_character_table(complex)}) {
      const auto ids = central_idempotents(table);
      AlgebraElement total = AlgebraElement::zero(g, Ring::kCyc);
      std::size_t dims = 0;
      for (std::size_t a = 0; a < ids.size(); ++a) {
        const auto report = verify_idempotent(ids[a]);
        CHECK(report.idempotent);
        CHECK(report.central);
        for (std::size_t b = 0; b < ids.size(); ++b) {
          if (a != b) CHECK((ids[a] * ids[b]).is_zero());
        }
        total += ids[a];
        dims += block_dimension(ids[a]);
      }
      CHECK(total == AlgebraElement::identity(g));
      if (table.field == TableField::kReal) CHECK(dims == g->order());
    }
  }
}

TEST_CASE("trivial block is the averaging idempotent") {
  for (const auto* name : {"Q8", "2T", "Z3"}) {
    const auto g = builtin_group(name);
    const auto ids = central_idempotents(complex_character_table(g));
    CHECK(ids.front().coeffs() == std::vector<CycScalar>(g->order(), frac(1, static_cast<long>(g->order()))));
    CHECK(block_dimension(ids.front()) == 1);
  }
}

TEST_CASE("closed-form idempotents of 2T") {
  const auto g = builtin_group("2T");
  const std::map<std::string, std::string> row_for = {
      {"R", "1"}, {"C", "2"}, {"M3(R)", "3"}, {"H", "4H"}, {"M2(C)", "4C"}};
  const std::map<std::string, std::size_t> dims = {{"R", 1}, {"C", 2}, {"M3(R)", 9}, {"H", 4}, {"M2(C)", 8}};
  for (const auto& named : tetrahedral_idempotents(g)) {
    CAPTURE(named.block);
    const auto report = verify_idempotent(named.element);
    CHECK(report.idempotent);
    CHECK(report.central);
    CHECK(named.element == block(g, row_for.at(named.block)));
    CHECK(block_dimension(named.element) == dims.at(named.block));
    CHECK(named.element.minimal_ring() == Ring::kRat);
  }
  CHECK(fermion_projection(g) == block(g, "4H") + block(g, "4C"));
  CHECK(boson_projection(g) == block(g, "1") + block(g, "2") + block(g, "3"));
  const auto e = AlgebraElement::identity(g, Ring::kRat);
  const auto s = order_three_sum(g);
  CHECK((frac(1, 6) * (CycScalar(2L) * e - s)).coeff(0) == frac(1, 3));
  CHECK((frac(1, 6) * (CycScalar(4L) * e + s)).coeff(0) == frac(2, 3));
  // the two fermion projections split (e - i^2)/2
  const auto f = fermion_projection(g);
  CHECK(f * (frac(1, 6) * (CycScalar(2L) * e - s)) == block(g, "4H"));
  CHECK(f * (frac(1, 6) * (CycScalar(4L) * e + s)) == block(g, "4C"));
}

TEST_CASE("verify_idempotent rejects e + i") {
  const auto g = builtin_group("Q8");
  const auto a = AlgebraElement::identity(g) + AlgebraElement::of(g, Quaternion::unit_i());
  CHECK_FALSE(verify_idempotent(a).idempotent);
  CHECK_FALSE(verify_idempotent(a).central);
  try {
    block_dimension(a);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kNotIdempotent);
  }
}

TEST_CASE("idempotents of commutative group algebras") {
  const auto z3 = builtin_group("Z3");
  const auto e = AlgebraElement::identity(z3, Ring::kRat);
  const auto w = el(z3, quaternion_w()), v = el(z3, quaternion_v());
  const auto all = enumerate_idempotents_commutative(z3);
  REQUIRE(all.size() == 4);
  const std::vector<AlgebraElement> expected = {AlgebraElement::zero(z3), frac(1, 3) * (e + v + w),
                                                frac(1, 3) * (CycScalar(2L) * e - v - w), e};
  for (const auto& x : expected) CHECK(std::find(all.begin(), all.end(), x) != all.end());
  for (const auto& x : all) CHECK(verify_idempotent(x).idempotent);
  const auto integral = integral_idempotent_check(z3);
  CHECK(integral.size() == 2);
  CHECK(integral[0].is_zero());
  CHECK(integral[1] == e);

  const auto z2 = builtin_group("Z2");
  const auto minus = el(z2, -Quaternion::one());
  const auto e2 = AlgebraElement::identity(z2, Ring::kRat);
  const auto z2all = enumerate_idempotents_commutative(z2);
  CHECK(z2all.size() == 4);
  CHECK(std::find(z2all.begin(), z2all.end(), frac(1, 2) * (e2 + minus)) != z2all.end());
  CHECK(std::find(z2all.begin(), z2all.end(), frac(1, 2) * (e2 - minus)) != z2all.end());
  CHECK(integral_idempotent_check(z2).size() == 2);

  const auto trivial = builtin_group("1");
  CHECK(enumerate_idempotents_commutative(trivial).size() == 2);
  CHECK(integral_idempotent_check(trivial).size() == 2);

  // Z4: rational blocks {1}, {-1 sign}, {i, -i}
  CHECK(enumerate_idempotents_commutative(builtin_group("Z4")).size() == 8);
  CHECK_THROWS_AS(enumerate_idempotents_commutative(builtin_group("Q8")), Error);
}

TEST_CASE("brute-force integral idempotents of Z3 with small coefficients") {
  // every idempotent a + b w + c v with |a|,|b|,|c| <= 3
  const auto z3 = builtin_group("Z3");
  std::size_t found = 0;
  for (long a = -3; a <= 3; ++a) {
    for (long b = -3; b <= 3; ++b) {
      for (long c = -3; c <= 3; ++c) {
        std::vector<CycScalar> coeffs(3);
        coeffs[0] = CycScalar(a);
        coeffs[*z3->find_quaternion(quaternion_w())] = CycScalar(b);
        coeffs[*z3->find_quaternion(quaternion_v())] = CycScalar(c);
        const AlgebraElement x(z3, Ring::kInt, coeffs);
        if (x * x == x) ++found;
      }
    }
  }
  CHECK(found == 2);
}

TEST_CASE("q8_decompose") {
  const auto g = builtin_group("Q8");
  const auto basis = q8_basis(g);
  const auto one = q8_decompose(AlgebraElement::identity(g));
  const std::array<CycScalar, 8> raw_one = {frac(1, 8), frac(1, 8), frac(1, 8), frac(1, 8), frac(1, 2), 0L, 0L, 0L};
  CHECK(one.raw == raw_one);
  const std::array<CycScalar, 8> normalized_one = {1L, 1L, 1L, 1L, 1L, 0L, 0L, 0L};
  CHECK(one.normalized == normalized_one);

  const auto a = q8_decompose(basis[0]);
  const std::array<CycScalar, 8> unit = {1L, 0L, 0L, 0L, 0L, 0L, 0L, 0L};
  CHECK(a.raw == unit);
  CHECK(a.charges[0].charge == 0);
  CHECK(a.charges[0].weak_isospin == Rational(1, 2));
  CHECK(a.charges[1].charge == -1);
  CHECK(a.charges[1].weak_isospin == Rational(-1, 2));
  CHECK(a.charges[2].charge == 1);
  CHECK(a.charges[2].weak_isospin == Rational(1, 2));
  CHECK(a.charges[3].charge == 0);
  CHECK(a.charges[3].weak_isospin == Rational(-1, 2));
  CHECK(q8_decompose(basis[2]).raw[2] == CycScalar(1L));

  // 1a..1d span the 1-dimensional blocks: each is 8 times a primitive idempotent
  const auto t = complex_character_table(g);
  const auto ids = central_idempotents(t);
  for (std::size_t b = 0; b < 4; ++b) {
    const auto scaled = frac(1, 8) * basis[b];
    CHECK(verify_idempotent(scaled).idempotent);
    CHECK(std::find(ids.begin(), ids.end(), scaled) != ids.end());
  }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CycScalar> coeffs(8);
    for (auto& c : coeffs) c = testing::random_scalar(rng);
    const AlgebraElement x(g, Ring::kCyc, coeffs);
    CHECK(q8_reconstruct(g, q8_decompose(x).raw) == x);
  }
  try {
    q8_decompose(AlgebraElement::identity(builtin_group("2T")));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kWrongGroup);
  }
}

TEST_CASE("to_string") {
  const auto g = builtin_group("Z3");
  CHECK(AlgebraElement::zero(g).to_string() == "0");
  const auto x = frac(1, 3) * (CycScalar(2L) * AlgebraElement::identity(g) - el(g, quaternion_w()));
  CHECK(x.to_string() == "2/3*1 - 1/3*(-1+i+j+k)/2");
}
