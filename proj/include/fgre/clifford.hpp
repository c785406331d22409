#pragma once

#include <string>
#include <vector>

#include "fgre/cyclotomic.hpp"
#include "fgre/group.hpp"

namespace fgre {

/// The operator X -> A X B on 2x2 matrices, realized on the basis
/// E11, E12, E21, E22 as kron(A, B^T).
struct LROperator {
  CycMatrix left;
  CycMatrix right;
  CycMatrix realized;

  CycMatrix apply(const CycMatrix& x) const;
};

LROperator lr_operator(const CycMatrix& a, const CycMatrix& b);

/// Apply `second` after `first`: (A1,B1) o (A2,B2) = (A1 A2, B2 B1).
LROperator compose(const LROperator& first_applied_last, const LROperator& second);
/// Scalar multiple, carried on the left factor.
LROperator scale(const CycScalar& c, const LROperator& op);

/// sigma_1, sigma_2, sigma_3 for k = 1, 2, 3; k = 0 gives the identity.
CycMatrix pauli(int k);

struct GammaSet {
  std::vector<LROperator> gammas;
};

/// gamma0 = (1, s1), gamma1 = (s1, i s2), gamma2 = (s2, i s2), gamma3 = (s3, i s2).
GammaSet default_gammas();

struct CliffordSignature {
  std::vector<int> squares;  // +1 or -1 per gamma
  std::string format() const;  // "(+,-,-,-)"
};

/// Checks g_a g_b + g_b g_a = 0 for a != b and g_a^2 = +-1. Throws kNotClifford
/// naming the first offending pair.
CliffordSignature clifford_verify(const GammaSet& gs);

/// Group generated by realized operators.
FiniteGroup operator_group(const std::string& name, const std::vector<LROperator>& generators,
                           std::size_t cap = kDefaultClosureCap);

/// Group generated by i*gamma0 and i*gamma1*gamma2*gamma3, which act on the right only.
FiniteGroup right_mult_group(const GammaSet& gs);

/// Dimension over Q of the smallest space containing the generators and closed
/// under commutators. Entries are expanded into their 8 rational coordinates.
std::size_t lie_closure_dim(const std::vector<CycMatrix>& generators);

/// The rational span of the closures of two generator sets, for comparing subspaces.
std::size_t joint_closure_dim(const std::vector<CycMatrix>& a, const std::vector<CycMatrix>& b);

/// Products gamma_S over all subsets S, in bitmask order.
std::vector<CycMatrix> gamma_products(const GammaSet& gs);

/// Rank of the products over Q(zeta_24).
std::size_t gamma_product_rank(const GammaSet& gs);

}  // namespace fgre
