#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgre/character.hpp"
#include "fgre/cyclotomic.hpp"
#include "fgre/group.hpp"

namespace fgre {

/// A matrix representation given by generator images. Images of the other
/// elements are filled in along the Cayley graph at construction.
class MatrixRep {
 public:
  /// `generators` are element indices of `group`; they must generate it.
  MatrixRep(std::string name, GroupPtr group, std::vector<std::size_t> generators,
            std::vector<CycMatrix> generator_images);

  /// Generators named through the group's generator names (or element labels).
  static MatrixRep from_named(std::string name, GroupPtr group, const std::vector<std::string>& generator_names,
                              std::vector<CycMatrix> generator_images);

  const std::string& name() const { return name_; }
  const GroupPtr& group() const { return group_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<CycMatrix>& generator_images() const { return generator_images_; }
  std::vector<std::string> generator_names() const;

  /// Image of every element, or nullopt if the generator images were not
  /// consistent with the Cayley graph.
  const std::optional<std::vector<CycMatrix>>& element_images() const { return images_; }
  const CycMatrix& image(std::size_t element) const;

 private:
  std::string name_;
  GroupPtr group_;
  std::size_t dimension_ = 0;
  std::vector<std::size_t> generators_;
  std::vector<CycMatrix> generator_images_;
  std::optional<std::vector<CycMatrix>> images_;
};

/// "2T.1", "2T.2", "2T.3", "2T.4H", "2T.4H_complex", "2T.4C".
MatrixRep builtin_rep(const std::string& name);
std::vector<std::string> builtin_rep_names();

/// Checks rho(x) rho(y) = rho(xy) for every pair of elements.
bool verify_homomorphism(const MatrixRep& r);

/// Trace per conjugacy class. Throws kNotAHomomorphism.
Character rep_character(const MatrixRep& r);

/// e_x -> e_{x g^-1} on the basis of group elements.
MatrixRep regular_representation(GroupPtr g);

/// Same characters class by class. Throws kNotAHomomorphism.
bool reps_equivalent(const MatrixRep& a, const MatrixRep& b);

/// Each complex entry a+bi becomes the block [[a,-b],[b,a]].
MatrixRep realify(const MatrixRep& r);

/// Kronecker product of two representations of the same group.
MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b);

}  // namespace fgre
