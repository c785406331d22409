// fgre: command-line front end for the exact representation-theory engine.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fgre/error.hpp"
#include "fgre/verify.hpp"

using namespace fgre;

namespace {

enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kCap = 3, kUnsupported = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapExceeded: return kCap;
    case ErrorKind::kUnsupportedExponent: return kUnsupported;
    case ErrorKind::kInternalInconsistency:
    case ErrorKind::kNotClifford:
    case ErrorKind::kNotAHomomorphism:
    case ErrorKind::kNotIdempotent: return kFail;
    default: return kUsage;
  }
}

struct Common {
  std::string format = "text";
  std::string group = "builtin:2T";
  std::string out;
  std::size_t cap = kDefaultClosureCap;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::kInvalidInput, "cannot write " + c.out);
  f << text;
}

void add_common(CLI::App* sub, Common& c, bool with_group = true) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  if (with_group) sub->add_option("--group", c.group, "builtin:NAME or file:PATH");
  sub->add_option("--out", c.out, "Write output to FILE instead of stdout");
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + cells[k];
  return s + "\n";
}

std::string pad(const std::string& s, std::size_t n) { return s.size() >= n ? s : s + std::string(n - s.size(), ' '); }

// ---- group info

int group_info(const Common& c) {
  const auto g = resolve_group(c.group, c.cap);
  const auto z = center(*g);
  if (c.format == "json") {
    Json j;
    j["name"] = g->name();
    j["order"] = g->order();
    j["exponent"] = g->exponent();
    Json classes = Json::array();
    for (const auto& cl : g->classes()) {
      Json members = Json::array();
      for (auto m : cl.members) members.push_back(g->label(m));
      classes.push_back({{"size", cl.size}, {"order", cl.element_order}, {"members", members}});
    }
    j["classes"] = classes;
    Json center_labels = Json::array();
    for (auto x : z) center_labels.push_back(g->label(x));
    j["center"] = center_labels;
    Json gens = Json::array();
    for (auto x : g->generators()) gens.push_back(g->label(x));
    j["generators"] = gens;
    emit(c, dump_json(j));
    return kOk;
  }
  if (c.format == "csv") {
    std::string s = csv_line({"size", "elements", "order"});
    for (const auto& cl : g->classes()) {
      std::string members;
      for (auto m : cl.members) members += (members.empty() ? "" : " ") + g->label(m);
      s += csv_line({std::to_string(cl.size), "\"" + members + "\"", std::to_string(cl.element_order)});
    }
    emit(c, s);
    return kOk;
  }
  std::ostringstream out;
  out << g->name() << ": order " << g->order() << ", exponent " << g->exponent() << ", " << g->classes().size()
      << " classes\n";
  out << render_class_table(*g);
  out << "center:";
  for (auto x : z) out << " " << g->label(x);
  out << "\ngenerators:";
  for (auto x : g->generators()) out << " " << g->label(x);
  out << "\n";
  emit(c, out.str());
  return kOk;
}

// ---- chartable

int chartable(const Common& c, const std::string& field, bool check) {
  const auto g = resolve_group(c.group, c.cap);
  const auto complex = complex_character_table(g);
  if (check && !check_orthogonality(complex)) {
    std::cerr << "orthogonality check failed\n";
    return kFail;
  }
  const auto t = field == "real" ? real_character_table(complex) : complex;
  if (c.format == "json") {
    emit(c, dump_json(table_to_json(t)));
  } else if (c.format == "csv") {
    emit(c, render_table_csv(t));
  } else {
    emit(c, render_table_text(t));
  }
  return kOk;
}

// ---- tensor

int tensor(const Common& c, bool all, const std::string& reps) {
  const auto g = resolve_group(c.group, c.cap);
  const auto t = real_character_table(complex_character_table(g));
  const auto lookup = [&](const std::string& label) -> const Character& {
    const auto idx = t.find_label(label);
    if (!idx) throw Error(ErrorKind::kUnknownName, "no irreducible labelled '" + label + "'");
    return t.rows[*idx];
  };
  if (!all) {
    const auto comma = reps.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::kInvalidInput, "--reps takes two labels, e.g. 2,3");
    const std::string a = reps.substr(0, comma), b = reps.substr(comma + 1);
    const auto d = tensor_decompose(lookup(a), lookup(b), t);
    if (c.format == "json") {
      emit(c, dump_json(Json{{"left", a}, {"right", b}, {"decomposition", d.compact(t)}}));
    } else {
      emit(c, d.compact(t) + "\n");
    }
    return kOk;
  }
  // Nontrivial rows only; tensoring with the trivial row is the identity.
  std::vector<std::string> labels;
  for (const auto& r : t.rows) {
    if (r.label != "1") labels.push_back(r.label);
  }
  std::vector<std::vector<std::string>> cells(labels.size(), std::vector<std::string>(labels.size()));
  std::size_t width = 4;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = 0; b < labels.size(); ++b) {
      cells[a][b] = tensor_decompose(lookup(labels[a]), lookup(labels[b]), t).compact(t);
      width = std::max(width, cells[a][b].size() + 2);
    }
  }
  if (c.format == "json") {
    Json j;
    j["group"] = g->name();
    j["labels"] = labels;
    j["table"] = cells;
    emit(c, dump_json(j));
  } else if (c.format == "csv") {
    std::vector<std::string> head = {"x"};
    head.insert(head.end(), labels.begin(), labels.end());
    std::string s = csv_line(head);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      std::vector<std::string> line = {labels[a]};
      line.insert(line.end(), cells[a].begin(), cells[a].end());
      s += csv_line(line);
    }
    emit(c, s);
  } else {
    std::string s = pad("x", 4);
    for (const auto& l : labels) s += pad(l, width);
    s += "\n";
    for (std::size_t a = 0; a < labels.size(); ++a) {
      s += pad(labels[a], 4);
      for (const auto& cell : cells[a]) s += pad(cell, width);
      s += "\n";
    }
    emit(c, s);
  }
  return kOk;
}

// ---- verify-paper

int verify_paper(const Common& c, const std::vector<std::string>& only, const std::string& corrupt) {
  VerifyOptions options;
  options.only.insert(only.begin(), only.end());
  options.corrupt_rep = corrupt;
  options.cap = c.cap;
  const auto report = verify_all(options);
  emit(c, c.format == "json" ? dump_json(report.to_json()) : report.to_text());
  return report.ok() ? kOk : kFail;
}

// ---- idempotents

int idempotents(const Common& c) {
  const auto g = resolve_group(c.group, c.cap);
  std::vector<std::pair<std::string, AlgebraElement>> list;
  if (g->name() == "2T") {
    for (auto& n : tetrahedral_idempotents(g)) list.emplace_back(n.block, n.element);
  } else {
    const auto t = real_character_table(complex_character_table(g));
    const auto ids = central_idempotents(t);
    for (std::size_t r = 0; r < ids.size(); ++r) list.emplace_back(t.rows[r].label, ids[r]);
  }
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& [name, e] : list) {
      arr.push_back({{"block", name}, {"dimension", block_dimension(e)}, {"element", element_to_json(e)}});
    }
    emit(c, dump_json(Json{{"group", g->name()}, {"idempotents", arr}}));
  } else if (c.format == "csv") {
    std::string s = csv_line({"block", "dimension", "element"});
    for (const auto& [name, e] : list) s += csv_line({name, std::to_string(block_dimension(e)), "\"" + e.to_string() + "\""});
    emit(c, s);
  } else {
    std::string s;
    for (const auto& [name, e] : list) {
      s += pad(name, 7) + pad(std::to_string(block_dimension(e)), 4) + e.to_string() + "\n";
    }
    emit(c, s);
  }
  return kOk;
}

// ---- wedderburn

int wedderburn(const Common& c, const std::string& field) {
  const auto g = resolve_group(c.group, c.cap);
  const auto w = field == "complex" ? complex_wedderburn(g) : real_wedderburn(g);
  if (c.format == "json") {
    Json blocks = Json::array();
    for (const auto& b : w.blocks) blocks.push_back({{"block", block_name(b)}, {"real_dimension", b.real_dimension}});
    emit(c, dump_json(Json{{"group", g->name()}, {"field", field}, {"structure", w.format()}, {"blocks", blocks}}));
  } else {
    emit(c, w.format() + "\n");
  }
  return kOk;
}

// ---- dirac verify

int dirac_verify(const Common& c) {
  const auto gs = default_gammas();
  const auto sig = clifford_verify(gs);
  const auto right = right_mult_group(gs);
  const bool q8 = class_profile(right) == class_profile(*builtin_group("Q8"));
  const std::size_t rank = gamma_product_rank(gs);
  if (c.format == "json") {
    Json j = gammas_to_json(gs);
    j["signature"] = sig.format();
    j["right_group_order"] = right.order();
    j["right_group_is_q8"] = q8;
    j["gamma_product_rank"] = rank;
    emit(c, dump_json(j));
  } else {
    std::ostringstream out;
    out << "signature " << sig.format() << "\n";
    out << "right multiplication group: order " << right.order() << (q8 ? ", Q8 class profile" : "") << "\n";
    out << "gamma products: rank " << rank << " of 16\n";
    emit(c, out.str());
  }
  return q8 && right.order() == 8 && rank == 16 ? kOk : kFail;
}

// ---- decompose

int decompose(const Common& c, const std::string& element_file, const std::string& basis_label) {
  const auto g = resolve_group(c.group, c.cap);
  AlgebraElement a = AlgebraElement::identity(g);
  if (!element_file.empty()) {
    a = element_from_json(read_json_file(element_file), g);
  } else if (!basis_label.empty()) {
    const auto idx = g->find_label(basis_label);
    if (!idx) throw Error(ErrorKind::kUnknownName, "no element labelled '" + basis_label + "'");
    a = AlgebraElement::basis(g, *idx);
  }
  const auto d = q8_decompose(a);
  if (c.format == "json") {
    Json coords = Json::object();
    for (std::size_t k = 0; k < 8; ++k) {
      coords[Q8Decomposition::kNames[k]] = {{"raw", scalar_to_json(d.raw[k])},
                                            {"normalized", scalar_to_json(d.normalized[k])}};
    }
    Json charges = Json::object();
    for (std::size_t k = 0; k < 4; ++k) {
      charges[Q8Decomposition::kNames[k]] = {{"charge", rational_to_json(d.charges[k].charge)},
                                             {"weak_isospin", rational_to_json(d.charges[k].weak_isospin)}};
    }
    emit(c, dump_json(Json{{"element", a.to_string()}, {"coordinates", coords}, {"charges", charges}}));
    return kOk;
  }
  std::string s = c.format == "csv" ? csv_line({"component", "raw", "normalized", "charge", "weak_isospin"}) : "";
  for (std::size_t k = 0; k < 8; ++k) {
    const std::string q = k < 4 ? format_rational(d.charges[k].charge) : "";
    const std::string t = k < 4 ? format_rational(d.charges[k].weak_isospin) : "";
    if (c.format == "csv") {
      s += csv_line({Q8Decomposition::kNames[k], d.raw[k].pretty(), d.normalized[k].pretty(), q, t});
    } else {
      s += pad(Q8Decomposition::kNames[k], 4) + pad(d.raw[k].pretty(), 8) + pad(d.normalized[k].pretty(), 8);
      if (k < 4) s += "Q=" + pad(q, 5) + "T3=" + t;
      s += "\n";
    }
  }
  emit(c, s);
  return kOk;
}

// ---- closure

int closure(const Common& c, const std::string& file, const std::string& set) {
  std::vector<GeneratorSet> sets;
  if (!file.empty()) {
    sets.push_back(generator_set_from_json(read_json_file(file)));
  } else {
    for (auto& s : f4_candidate_sets()) {
      if (set.empty() || s.name == set) sets.push_back(std::move(s));
    }
    if (sets.empty()) throw Error(ErrorKind::kUnknownName, "no generator set named '" + set + "'");
  }
  bool ok = true;
  Json arr = Json::array();
  std::string text;
  for (const auto& s : sets) {
    const auto result = matrix_group_closure(s.generators, c.cap, false);
    const bool match = s.expected_order == 0 || result.order == s.expected_order;
    if (s.blocking) ok = ok && match;
    arr.push_back({{"name", s.name},
                   {"order", result.order},
                   {"expected", s.expected_order},
                   {"blocking", s.blocking},
                   {"match", match}});
    text += s.name + ": order " + std::to_string(result.order);
    if (s.expected_order) text += " (expected " + std::to_string(s.expected_order) + (match ? ", ok" : ", MISMATCH");
    if (s.expected_order) text += std::string(s.blocking ? "" : ", non-blocking") + ")";
    text += "\n";
  }
  if (c.format == "json") {
    emit(c, dump_json(Json{{"closures", arr}}));
  } else {
    emit(c, text);
  }
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables, group algebras and Clifford checks for small groups"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--cap", c.cap, "Closure cap (elements)")->envname("FGRE_CAP");

  std::function<int()> action;

  auto* group_cmd = app.add_subcommand("group", "Group commands");
  group_cmd->require_subcommand(1);
  auto* info = group_cmd->add_subcommand("info", "Order, classes, center and generators");
  add_common(info, c);
  info->callback([&] { action = [&] { return group_info(c); }; });

  std::string field = "complex";
  bool check = false;
  auto* chart = app.add_subcommand("chartable", "Character table");
  add_common(chart, c);
  chart->add_option("--field", field)->check(CLI::IsMember({"complex", "real"}));
  chart->add_flag("--check", check, "Re-verify orthogonality first");
  chart->callback([&] { action = [&] { return chartable(c, field, check); }; });

  bool all = false;
  std::string reps;
  auto* tens = app.add_subcommand("tensor", "Tensor products of real irreducibles");
  add_common(tens, c);
  auto* all_opt = tens->add_flag("--all", all, "Full table");
  tens->add_option("--reps", reps, "Two labels, e.g. 2,3")->excludes(all_opt);
  tens->callback([&] {
    if (!all && reps.empty()) throw CLI::ValidationError("tensor", "one of --all or --reps is required");
    action = [&] { return tensor(c, all, reps); };
  });

  std::vector<std::string> only;
  std::string corrupt;
  auto* ver = app.add_subcommand("verify-paper", "Run the reference reproduction checks");
  add_common(ver, c, false);
  ver->add_option("--only", only, "Run only these checks")->delimiter(',');
  ver->add_option("--corrupt-rep", corrupt)->group("");
  ver->callback([&] { action = [&] { return verify_paper(c, only, corrupt); }; });

  auto* idem = app.add_subcommand("idempotents", "Primitive central idempotents of the rational group algebra");
  add_common(idem, c);
  idem->callback([&] { action = [&] { return idempotents(c); }; });

  std::string wfield = "real";
  auto* wed = app.add_subcommand("wedderburn", "Wedderburn structure");
  add_common(wed, c);
  wed->add_option("--field", wfield)->check(CLI::IsMember({"complex", "real"}));
  wed->callback([&] { action = [&] { return wedderburn(c, wfield); }; });

  auto* dirac = app.add_subcommand("dirac", "Gamma matrices on 2x2 complex matrices");
  dirac->require_subcommand(1);
  auto* dver = dirac->add_subcommand("verify", "Check the default gamma set");
  add_common(dver, c, false);
  dver->callback([&] { action = [&] { return dirac_verify(c); }; });

  std::string element_file, basis_label;
  auto* dec = app.add_subcommand("decompose", "Coordinates in the 1a..1d/t..z basis of QQ8");
  add_common(dec, c);
  dec->add_option("--element", element_file, "Element JSON file");
  dec->add_option("--basis", basis_label, "A single group element by label");
  dec->callback([&] {
    if (dec->count("--group") == 0) c.group = "builtin:Q8";
    action = [&] { return decompose(c, element_file, basis_label); };
  });

  std::string file, set;
  auto* clo = app.add_subcommand("closure", "Matrix group closure of generator sets");
  add_common(clo, c, false);
  auto* file_opt = clo->add_option("--file", file, "Generator-set JSON");
  clo->add_option("--set", set, "Built-in set: lr-2T, lr-2T-conj, lr-2T-conj-bar")->excludes(file_opt);
  clo->callback([&] { action = [&] { return closure(c, file, set); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kUsage;
  }
}
