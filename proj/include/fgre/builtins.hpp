#pragma once

#include <string>
#include <vector>

#include "fgre/cyclotomic.hpp"
#include "fgre/group.hpp"

namespace fgre {

/// w = (-1+i+j+k)/2 and its quaternion conjugate v = (-1-i-j-k)/2.
Quaternion quaternion_w();
Quaternion quaternion_v();

/// Built-in groups: "Q8" = <i, j>, "2T" = <i, w>, "Z3" = <w>, "Z4" = <i>,
/// "Z2" = <-1>, "1". Shared instances; throws Error(kUnknownName).
GroupPtr builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

/// x -> q x and x -> x q on H with basis 1, i, j, k.
CycMatrix left_matrix(const Quaternion& q);
CycMatrix right_matrix(const Quaternion& q);

/// A named list of 4x4 generators for closure experiments on H.
struct GeneratorSet {
  std::string name;
  std::string description;
  std::vector<CycMatrix> generators;
  std::size_t expected_order = 0;
  bool blocking = true;  // false when the expected order is only conjectured
};

/// "lr-2T": L(i), L(w), R(i), R(w), order 288.
/// "lr-2T-conj": adds conjugation by 1+i, expected 576.
/// "lr-2T-conj-bar": adds quaternion conjugation as well, expected 1152.
std::vector<GeneratorSet> f4_candidate_sets();

}  // namespace fgre
