#pragma once

#include <string>

#include <json.hpp>

#include "fgre/algebra.hpp"
#include "fgre/builtins.hpp"
#include "fgre/character.hpp"
#include "fgre/clifford.hpp"
#include "fgre/group.hpp"
#include "fgre/reps.hpp"

namespace fgre {

/// Keys keep insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// 8 coordinate strings.
Json scalar_to_json(const CycScalar& x);
/// Accepts a coordinate array, a rational string or an integer.
CycScalar scalar_from_json(const Json& j);
Json matrix_to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Two-space indent and a trailing newline.
std::string dump_json(const Json& j);

/// Group definition: kind "quaternion", "permutation" or "cayley".
FiniteGroup group_from_json(const Json& j, std::size_t cap = kDefaultClosureCap);
/// Kind "cayley" with labels and generators, so any group can be written back.
Json group_to_json(const FiniteGroup& g);
/// "builtin:NAME" or "file:PATH". kUnknownName / kInvalidInput otherwise.
GroupPtr resolve_group(const std::string& spec, std::size_t cap = kDefaultClosureCap);

Json table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j, GroupPtr g);

Json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const Json& j, GroupPtr g);

Json rep_to_json(const MatrixRep& r);
MatrixRep rep_from_json(const Json& j, GroupPtr g);

Json gammas_to_json(const GammaSet& gs);

/// {"name": ..., "generators": [matrix, ...]} with optional "expected_order".
GeneratorSet generator_set_from_json(const Json& j);
Json generator_set_to_json(const GeneratorSet& s);

/// Size | Elements | Order, one line per class.
std::string render_class_table(const FiniteGroup& g);
std::string render_table_text(const CharacterTable& t);
std::string render_table_csv(const CharacterTable& t);

}  // namespace fgre
