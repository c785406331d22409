#include "fgre/builtins.hpp"

#include <array>
#include <map>
#include <mutex>

#include "fgre/error.hpp"

namespace fgre {

Quaternion quaternion_w() { return {Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}; }
Quaternion quaternion_v() { return {Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}; }

namespace {

FiniteGroup make_builtin(const std::string& name) {
  if (name == "Q8") return group_from_quaternions(name, {Quaternion::unit_i(), Quaternion::unit_j()}, kDefaultClosureCap, {"i", "j"});
  if (name == "2T") return group_from_quaternions(name, {Quaternion::unit_i(), quaternion_w()}, kDefaultClosureCap, {"i", "w"});
  if (name == "Z3") return group_from_quaternions(name, {quaternion_w()}, kDefaultClosureCap, {"w"});
  if (name == "Z4") return group_from_quaternions(name, {Quaternion::unit_i()}, kDefaultClosureCap, {"i"});
  if (name == "Z2") return group_from_quaternions(name, {-Quaternion::one()}, kDefaultClosureCap, {"-1"});
  if (name == "1") return group_from_quaternions(name, {Quaternion::one()}, kDefaultClosureCap, {"1"});
  throw Error(ErrorKind::kUnknownName, "no built-in group named '" + name + "'");
}

}  // namespace

GroupPtr builtin_group(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<const FiniteGroup>(make_builtin(name));
  cache.emplace(name, g);
  return g;
}

std::vector<std::string> builtin_group_names() { return {"Q8", "2T", "Z3", "Z4", "Z2", "1"}; }

namespace {

CycMatrix columns_of(const std::array<Quaternion, 4>& images) {
  CycMatrix m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const auto coords = images[c].coords();
    for (std::size_t r = 0; r < 4; ++r) m(r, c) = CycScalar(coords[r]);
  }
  return m;
}

const std::array<Quaternion, 4> kUnits = {Quaternion::one(), Quaternion::unit_i(), Quaternion::unit_j(),
                                          Quaternion::unit_k()};

}  // namespace

CycMatrix left_matrix(const Quaternion& q) {
  return columns_of({q * kUnits[0], q * kUnits[1], q * kUnits[2], q * kUnits[3]});
}

CycMatrix right_matrix(const Quaternion& q) {
  return columns_of({kUnits[0] * q, kUnits[1] * q, kUnits[2] * q, kUnits[3] * q});
}

std::vector<GeneratorSet> f4_candidate_sets() {
  const Quaternion i = Quaternion::unit_i(), w = quaternion_w();
  const std::vector<CycMatrix> core = {left_matrix(i), left_matrix(w), right_matrix(i), right_matrix(w)};
  // x -> (1+i) x (1+i)^-1 = (1+i) x (1-i) / 2
  const Quaternion a = Quaternion::one() + i;
  const CycMatrix conj_a = left_matrix(a) * right_matrix(a.conj()) * CycScalar(Rational(1, 2));
  const CycMatrix bar = CycMatrix(4, 4, {1L, 0L, 0L, 0L, 0L, -1L, 0L, 0L, 0L, 0L, -1L, 0L, 0L, 0L, 0L, -1L});
  std::vector<CycMatrix> with_conj = core;
  with_conj.push_back(conj_a);
  std::vector<CycMatrix> with_bar = with_conj;
  with_bar.push_back(bar);
  return {
      {"lr-2T", "left and right multiplications by i and w", core, 288, true},
      {"lr-2T-conj", "as lr-2T plus conjugation by 1+i", with_conj, 576, false},
      {"lr-2T-conj-bar", "as lr-2T-conj plus quaternion conjugation", with_bar, 1152, false},
  };
}

}  // namespace fgre
