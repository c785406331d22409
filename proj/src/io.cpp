#include "fgre/io.hpp"

#include <fstream>
#include <sstream>

#include "fgre/error.hpp"

namespace fgre {

Json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::kInvalidInput, "expected a rational string, got " + j.dump());
}

Json scalar_to_json(const CycScalar& x) {
  Json out = Json::array();
  for (int k = 0; k < CycScalar::kDegree; ++k) out.push_back(format_rational(x.coord(k)));
  return out;
}

CycScalar scalar_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != CycScalar::kDegree) throw Error(ErrorKind::kInvalidInput, "a scalar needs 8 coordinates");
    std::array<Rational, CycScalar::kDegree> coords;
    for (int k = 0; k < CycScalar::kDegree; ++k) coords[k] = rational_from_json(j[k]);
    return CycScalar::from_coords(coords);
  }
  return CycScalar(rational_from_json(j));
}

Json matrix_to_json(const CycMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

CycMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(ErrorKind::kInvalidInput, "a matrix is a list of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  CycMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::kInvalidInput, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, path + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::kInvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw Error(ErrorKind::kInvalidInput, std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  if (!j.is_array()) throw Error(ErrorKind::kInvalidInput, "expected a list of strings");
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorKind::kInvalidInput, "expected a list of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Permutation permutation_from_json(const Json& j, std::size_t degree) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree);
  if (!j.is_array()) throw Error(ErrorKind::kInvalidInput, "a permutation is a cycle string or an image list");
  Permutation p;
  for (const auto& x : j) p.push_back(x.get<std::uint32_t>());
  return p;
}

std::size_t degree_of(const Json& gens) {
  std::size_t degree = 0;
  for (const auto& g : gens) {
    if (g.is_array()) {
      degree = std::max(degree, g.size());
    } else if (g.is_string()) {
      std::string digits;
      for (char c : g.get<std::string>()) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          digits += c;
        } else if (!digits.empty()) {
          degree = std::max<std::size_t>(degree, std::stoul(digits) + 1);
          digits.clear();
        }
      }
    }
  }
  return degree;
}

}  // namespace

FiniteGroup group_from_json(const Json& j, std::size_t cap) {
  try {
    const std::string kind = field(j, "kind").get<std::string>();
    const std::string name = string_field(j, "name", "G");
    if (kind == "quaternion") {
      std::vector<Quaternion> gens;
      for (const auto& g : field(j, "generators")) {
        if (!g.is_array() || g.size() != 4) throw Error(ErrorKind::kInvalidInput, "a quaternion has 4 coordinates");
        gens.push_back({rational_from_json(g[0]), rational_from_json(g[1]), rational_from_json(g[2]),
                        rational_from_json(g[3])});
      }
      std::vector<std::string> names;
      if (j.contains("generator_names")) names = string_list(j.at("generator_names"));
      return group_from_quaternions(name, gens, cap, names);
    }
    if (kind == "permutation") {
      const Json& gens_json = field(j, "generators");
      const std::size_t degree = j.contains("degree") ? j.at("degree").get<std::size_t>() : degree_of(gens_json);
      std::vector<Permutation> gens;
      for (const auto& g : gens_json) gens.push_back(permutation_from_json(g, degree));
      return group_from_permutations(name, gens, cap);
    }
    if (kind == "cayley") {
      std::vector<std::vector<std::size_t>> table;
      for (const auto& row : field(j, "table")) table.push_back(row.get<std::vector<std::size_t>>());
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = string_list(j.at("labels"));
      std::vector<std::size_t> gens;
      if (j.contains("generators")) {
        for (const auto& label : string_list(j.at("generators"))) {
          const auto it = std::find(labels.begin(), labels.end(), label);
          if (it == labels.end()) throw Error(ErrorKind::kInvalidInput, "unknown generator label '" + label + "'");
          gens.push_back(static_cast<std::size_t>(it - labels.begin()));
        }
      }
      return group_from_cayley(name, table, labels, gens);
    }
    throw Error(ErrorKind::kInvalidInput, "unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("malformed group definition: ") + e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["kind"] = "cayley";
  j["name"] = g.name();
  j["labels"] = g.labels();
  Json gens = Json::array();
  for (auto x : g.generators()) gens.push_back(g.label(x));
  j["generators"] = gens;
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = table;
  return j;
}

GroupPtr resolve_group(const std::string& spec, std::size_t cap) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_group(spec.substr(8));
  if (spec.rfind("file:", 0) == 0) {
    return std::make_shared<const FiniteGroup>(group_from_json(read_json_file(spec.substr(5)), cap));
  }
  throw Error(ErrorKind::kInvalidInput, "group spec must be builtin:NAME or file:PATH, got '" + spec + "'");
}

Json table_to_json(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  Json j;
  j["group"] = g.name();
  j["field"] = t.field == TableField::kComplex ? "complex" : "real";
  Json classes = Json::array();
  for (const auto& c : t.columns) {
    Json col;
    col["rep"] = g.label(c.representative);
    col["size"] = c.size;
    col["order"] = c.element_order;
    classes.push_back(std::move(col));
  }
  j["classes"] = classes;
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Json row;
    row["label"] = t.rows[r].label;
    row["degree"] = t.rows[r].dimension();
    Json values = Json::array();
    for (std::size_t c = 0; c < t.columns.size(); ++c) values.push_back(scalar_to_json(t.value(r, c)));
    row["values"] = values;
    row["fs"] = t.rows[r].indicator;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  return j;
}

CharacterTable table_from_json(const Json& j, GroupPtr group) {
  const FiniteGroup& g = *group;
  CharacterTable t;
  t.group = group;
  const std::string f = field(j, "field").get<std::string>();
  if (f != "complex" && f != "real") throw Error(ErrorKind::kInvalidInput, "field must be complex or real");
  t.field = f == "complex" ? TableField::kComplex : TableField::kReal;
  for (const auto& col : field(j, "classes")) {
    const auto rep = g.find_label(field(col, "rep").get<std::string>());
    if (!rep) throw Error(ErrorKind::kInvalidInput, "unknown class representative " + col.at("rep").dump());
    TableColumn c;
    c.representative = *rep;
    c.size = field(col, "size").get<std::size_t>();
    c.element_order = field(col, "order").get<std::size_t>();
    const std::size_t k = g.class_of(*rep);
    c.classes = {k};
    const std::size_t kinv = g.class_of(g.inverse(*rep));
    if (t.field == TableField::kReal && kinv != k) c.classes.push_back(kinv);
    t.columns.push_back(std::move(c));
  }
  for (const auto& row : field(j, "rows")) {
    Character chi;
    chi.values.resize(g.classes().size());
    chi.label = string_field(row, "label", "");
    chi.indicator = field(row, "fs").get<int>();
    const Json& values = field(row, "values");
    if (values.size() != t.columns.size()) throw Error(ErrorKind::kInvalidInput, "row length differs from class count");
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      for (auto k : t.columns[c].classes) chi.values[k] = scalar_from_json(values[c]);
    }
    t.rows.push_back(std::move(chi));
  }
  return t;
}

Json element_to_json(const AlgebraElement& a) {
  Json j;
  j["group"] = a.group()->name();
  j["ring"] = to_string(a.ring());
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) {
    coeffs.push_back(a.ring() == Ring::kCyc ? scalar_to_json(c) : rational_to_json(c.to_rational()));
  }
  j["coeffs"] = coeffs;
  return j;
}

AlgebraElement element_from_json(const Json& j, GroupPtr g) {
  const Ring ring = parse_ring(field(j, "ring").get<std::string>());
  std::vector<CycScalar> coeffs;
  for (const auto& c : field(j, "coeffs")) coeffs.push_back(scalar_from_json(c));
  return AlgebraElement(std::move(g), ring, std::move(coeffs));
}

Json rep_to_json(const MatrixRep& r) {
  Json j;
  j["group"] = r.group()->name();
  j["dim"] = r.dimension();
  Json gens = Json::object();
  const auto names = r.generator_names();
  for (std::size_t k = 0; k < names.size(); ++k) gens[names[k]] = matrix_to_json(r.generator_images()[k]);
  j["generators"] = gens;
  return j;
}

MatrixRep rep_from_json(const Json& j, GroupPtr g) {
  std::vector<std::string> names;
  std::vector<CycMatrix> images;
  for (const auto& [name, m] : field(j, "generators").items()) {
    names.push_back(name);
    images.push_back(matrix_from_json(m));
  }
  const std::size_t dim = field(j, "dim").get<std::size_t>();
  for (const auto& m : images) {
    if (m.rows() != dim) throw Error(ErrorKind::kInvalidInput, "generator image does not match dim");
  }
  return MatrixRep::from_named(string_field(j, "name", "rep"), std::move(g), names, std::move(images));
}

Json gammas_to_json(const GammaSet& gs) {
  Json out = Json::array();
  for (std::size_t k = 0; k < gs.gammas.size(); ++k) {
    Json g;
    g["name"] = "gamma" + std::to_string(k);
    g["left"] = matrix_to_json(gs.gammas[k].left);
    g["right"] = matrix_to_json(gs.gammas[k].right);
    g["realized"] = matrix_to_json(gs.gammas[k].realized);
    out.push_back(std::move(g));
  }
  return out;
}

GeneratorSet generator_set_from_json(const Json& j) {
  GeneratorSet s;
  s.name = string_field(j, "name", "generators");
  s.description = string_field(j, "description", "");
  for (const auto& m : field(j, "generators")) s.generators.push_back(matrix_from_json(m));
  if (j.contains("expected_order")) s.expected_order = j.at("expected_order").get<std::size_t>();
  if (j.contains("blocking")) s.blocking = j.at("blocking").get<bool>();
  return s;
}

Json generator_set_to_json(const GeneratorSet& s) {
  Json j;
  j["name"] = s.name;
  j["description"] = s.description;
  j["expected_order"] = s.expected_order;
  j["blocking"] = s.blocking;
  Json gens = Json::array();
  for (const auto& m : s.generators) gens.push_back(matrix_to_json(m));
  j["generators"] = gens;
  return j;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  // width in code points so that unicode labels line up
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return s + std::string(width > cps ? width - cps : 0, ' ');
}

std::size_t width_of(const std::string& s) {
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return cps;
}

std::string render_grid(const std::vector<std::vector<std::string>>& cells, std::size_t header_rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width_of(row[c]));
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      line += pad(cells[r][c], widths[c]);
      if (c + 1 < cells[r].size()) line += c == 0 ? " | " : "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
    if (r + 1 == header_rows) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c == 0 ? 3 : 2);
      out << std::string(total - 2, '-') << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_class_table(const FiniteGroup& g) {
  std::vector<std::vector<std::string>> cells = {{"Size", "Elements", "Order"}};
  for (const auto& c : g.classes()) {
    std::string members;
    for (auto m : c.members) members += (members.empty() ? "" : ", ") + g.label(m);
    cells.push_back({std::to_string(c.size), members, std::to_string(c.element_order)});
  }
  return render_grid(cells, 1);
}

std::string render_table_text(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> reps = {"class"}, sizes = {"size"}, orders = {"order"};
  for (const auto& c : t.columns) {
    std::string rep = g.label(c.representative);
    if (c.classes.size() > 1) rep += "*";
    reps.push_back(rep);
    sizes.push_back(std::to_string(c.size));
    orders.push_back(std::to_string(c.element_order));
  }
  reps.push_back("FS");
  cells = {reps, sizes, orders};
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> line = {t.rows[r].label};
    for (std::size_t c = 0; c < t.columns.size(); ++c) line.push_back(t.value(r, c).pretty_unicode());
    line.push_back(std::to_string(t.rows[r].indicator));
    cells.push_back(std::move(line));
  }
  std::string out = render_grid(cells, 3);
  if (t.field == TableField::kReal) out += "* class merged with its inverse class\n";
  return out;
}

std::string render_table_csv(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  std::ostringstream out;
  const auto quote = [](const std::string& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  };
  out << "label";
  for (const auto& c : t.columns) out << "," << quote(g.label(c.representative));
  out << ",fs\n";
  out << "size";
  for (const auto& c : t.columns) out << "," << c.size;
  out << ",\n";
  out << "order";
  for (const auto& c : t.columns) out << "," << c.element_order;
  out << ",\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << quote(t.rows[r].label);
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << "," << quote(t.value(r, c).pretty());
    out << "," << t.rows[r].indicator << "\n";
  }
  return out.str();
}

}  // namespace fgre
