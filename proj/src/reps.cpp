#include "fgre/reps.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "fgre/builtins.hpp"
#include "fgre/error.hpp"

namespace fgre {

MatrixRep::MatrixRep(std::string name, GroupPtr group, std::vector<std::size_t> generators,
                     std::vector<CycMatrix> generator_images)
    : name_(std::move(name)),
      group_(std::move(group)),
      generators_(std::move(generators)),
      generator_images_(std::move(generator_images)) {
  if (generators_.size() != generator_images_.size()) {
    throw Error(ErrorKind::kInvalidInput, "generator and image counts differ");
  }
  if (generator_images_.empty()) {
    if (group_->order() != 1) throw Error(ErrorKind::kInvalidInput, "a representation needs generator images");
    dimension_ = 1;
  } else {
    dimension_ = generator_images_.front().rows();
  }
  for (const auto& m : generator_images_) {
    if (m.rows() != dimension_ || m.cols() != dimension_) {
      throw Error(ErrorKind::kInvalidInput, "generator images must be square of one size");
    }
  }
  for (auto gen : generators_) {
    if (gen >= group_->order()) throw Error(ErrorKind::kInvalidInput, "generator index out of range");
  }

  const std::size_t n = group_->order();
  std::vector<std::optional<CycMatrix>> images(n);
  images[0] = CycMatrix::identity(dimension_);
  std::deque<std::size_t> queue = {0};
  bool consistent = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const std::size_t y = group_->mul(x, generators_[k]);
      CycMatrix m = *images[x] * generator_images_[k];
      if (!images[y]) {
        images[y] = std::move(m);
        queue.push_back(y);
      } else if (*images[y] != m) {
        consistent = false;
      }
    }
  }
  for (const auto& m : images) {
    if (!m) throw Error(ErrorKind::kInvalidInput, "generators of " + name_ + " do not generate " + group_->name());
  }
  if (consistent) {
    std::vector<CycMatrix> out;
    out.reserve(n);
    for (auto& m : images) out.push_back(std::move(*m));
    images_ = std::move(out);
  }
}

MatrixRep MatrixRep::from_named(std::string name, GroupPtr group, const std::vector<std::string>& generator_names,
                                std::vector<CycMatrix> generator_images) {
  std::vector<std::size_t> gens;
  for (const auto& gname : generator_names) {
    const auto& names = group->generator_names();
    const auto it = std::find(names.begin(), names.end(), gname);
    if (it != names.end()) {
      gens.push_back(group->generators()[it - names.begin()]);
    } else if (const auto idx = group->find_label(gname)) {
      gens.push_back(*idx);
    } else {
      throw Error(ErrorKind::kUnknownName, "no generator '" + gname + "' in " + group->name());
    }
  }
  return MatrixRep(std::move(name), std::move(group), std::move(gens), std::move(generator_images));
}

std::vector<std::string> MatrixRep::generator_names() const {
  std::vector<std::string> out;
  const auto& names = group_->generator_names();
  for (auto gen : generators_) {
    const auto& gens = group_->generators();
    const auto it = std::find(gens.begin(), gens.end(), gen);
    out.push_back(it != gens.end() ? names[it - gens.begin()] : group_->label(gen));
  }
  return out;
}

const CycMatrix& MatrixRep::image(std::size_t element) const {
  if (!images_) throw Error(ErrorKind::kNotAHomomorphism, name_ + " is not a homomorphism");
  return images_->at(element);
}

namespace {

CycScalar half() { return CycScalar(Rational(1, 2)); }

MatrixRep make_builtin(const std::string& name) {
  const GroupPtr g = builtin_group("2T");
  const std::vector<std::string> gens = {"i", "w"};
  const CycScalar r3 = cyc_sqrt3();
  const CycScalar i = cyc_i();
  if (name == "2T.1") return MatrixRep::from_named(name, g, gens, {CycMatrix::identity(1), CycMatrix::identity(1)});
  if (name == "2T.2") {
    return MatrixRep::from_named(name, g, gens,
                                 {CycMatrix::identity(2), half() * CycMatrix(2, 2, {-1L, r3, -r3, -1L})});
  }
  if (name == "2T.3") {
    return MatrixRep::from_named(name, g, gens,
                                 {CycMatrix(3, 3, {1L, 0L, 0L, 0L, -1L, 0L, 0L, 0L, -1L}),
                                  CycMatrix(3, 3, {0L, 1L, 0L, 0L, 0L, 1L, 1L, 0L, 0L})});
  }
  const CycMatrix right_i(4, 4, {0L, 1L, 0L, 0L, -1L, 0L, 0L, 0L, 0L, 0L, 0L, -1L, 0L, 0L, 1L, 0L});
  if (name == "2T.4H") {
    return MatrixRep::from_named(
        name, g, gens,
        {right_i, half() * CycMatrix(4, 4, {-1L, 1L, 1L, 1L, -1L, -1L, -1L, 1L, -1L, 1L, -1L, -1L, -1L, -1L, 1L, -1L})});
  }
  if (name == "2T.4H_complex") {
    const CycScalar one(1L);
    return MatrixRep::from_named(name, g, gens,
                                 {CycMatrix(2, 2, {i, 0L, 0L, -i}),
                                  half() * CycMatrix(2, 2, {-one + i, one + i, -one + i, -one - i})});
  }
  if (name == "2T.4C") {
    const CycScalar a = CycScalar(1L) + r3, b = CycScalar(1L) - r3;
    const CycScalar q(Rational(1, 4));
    return MatrixRep::from_named(
        name, g, gens,
        {right_i, q * CycMatrix(4, 4, {a, -b, -b, -a, b, a, a, -b, a, -b, b, a, b, a, -a, b})});
  }
  throw Error(ErrorKind::kUnknownName, "no built-in representation named '" + name + "'");
}

}  // namespace

std::vector<std::string> builtin_rep_names() {
  return {"2T.1", "2T.2", "2T.3", "2T.4H", "2T.4H_complex", "2T.4C"};
}

MatrixRep builtin_rep(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, MatrixRep> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  MatrixRep rep = make_builtin(name);
  cache.emplace(name, rep);
  return rep;
}

bool verify_homomorphism(const MatrixRep& r) {
  const auto& images = r.element_images();
  if (!images) return false;
  const FiniteGroup& g = *r.group();
  if ((*images)[0] != CycMatrix::identity(r.dimension())) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if ((*images)[x] * (*images)[y] != (*images)[g.mul(x, y)]) return false;
    }
  }
  return true;
}

Character rep_character(const MatrixRep& r) {
  if (!verify_homomorphism(r)) throw Error(ErrorKind::kNotAHomomorphism, r.name() + " is not a homomorphism");
  Character chi;
  for (const auto& c : r.group()->classes()) chi.values.push_back(r.image(c.representative).trace());
  // the indicator is only meaningful for irreducible characters
  if (inner_product(*r.group(), chi, chi) == CycScalar(1L)) chi.indicator = fs_indicator(*r.group(), chi);
  return chi;
}

MatrixRep regular_representation(GroupPtr g) {
  const std::size_t n = g->order();
  std::vector<CycMatrix> images;
  for (auto gen : g->generators()) {
    CycMatrix m(n, n);
    const std::size_t inv = g->inverse(gen);
    for (std::size_t x = 0; x < n; ++x) m(g->mul(x, inv), x) = CycScalar(1L);
    images.push_back(std::move(m));
  }
  std::vector<std::size_t> gens = g->generators();
  if (gens.empty()) {
    gens = {0};
    images = {CycMatrix::identity(1)};
  }
  return MatrixRep("regular(" + g->name() + ")", g, gens, std::move(images));
}

bool reps_equivalent(const MatrixRep& a, const MatrixRep& b) {
  if (a.group()->order() != b.group()->order() || a.group()->name() != b.group()->name()) {
    throw Error(ErrorKind::kWrongGroup, "representations of different groups");
  }
  return rep_character(a).values == rep_character(b).values;
}

MatrixRep realify(const MatrixRep& r) {
  std::vector<CycMatrix> images;
  for (const auto& m : r.generator_images()) images.push_back(fgre::realify(m));
  return MatrixRep(r.name() + ".real", r.group(), r.generators(), std::move(images));
}

MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b) {
  if (a.group() != b.group()) throw Error(ErrorKind::kWrongGroup, "representations of different groups");
  // images on a common generating set: a's generators
  std::vector<CycMatrix> images;
  for (auto gen : a.generators()) images.push_back(kronecker(a.image(gen), b.image(gen)));
  return MatrixRep(a.name() + "x" + b.name(), a.group(), a.generators(), std::move(images));
}

}  // namespace fgre
