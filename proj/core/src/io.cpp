#include "hopfrb/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopfrb::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("file is not valid JSON");
  return j;
}

const json& require_key(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field \"" + key + "\"");
  return *it;
}

std::size_t require_index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw SchemaError(where + ": expected a non-negative index");
  return j.get<std::size_t>();
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a string");
  return j.get<std::string>();
}

Field parse_field(const json& j) {
  std::string kind = require_string(require_key(j, "kind"), "field.kind");
  if (kind == "rational") return Field::rationals();
  if (kind == "gf") {
    const json& p = require_key(j, "p");
    if (!p.is_number_unsigned()) throw SchemaError("field.p: expected a positive integer");
    try {
      return Field::gf(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("field.p: ") + e.what());
    }
  }
  throw SchemaError("field.kind: unknown kind \"" + kind + "\"");
}

json field_json(const Field& f) {
  json j;
  j["kind"] = f.is_rational() ? "rational" : "gf";
  if (!f.is_rational()) j["p"] = f.p;
  return j;
}

Scalar parse_coeff(const json& j, const Field& f, const std::string& where) {
  std::string text = require_string(j, where);
  try {
    return Scalar::parse(text, f);
  } catch (const SchemaError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

// entry arrays like [{"c":"1","i":0,"j":1,"k":2}, ...]
SparseTensor parse_entries(const json& arr, std::vector<std::size_t> dims, const Field& f,
                           const std::vector<std::string>& keys, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where + ": expected an array of entries");
  SparseTensor t(std::move(dims), f);
  std::size_t n = 0;
  for (const auto& e : arr) {
    const std::string at = where + "[" + std::to_string(n++) + "]";
    if (!e.is_object()) throw SchemaError(at + ": expected an object");
    Index idx;
    for (const auto& key : keys) {
      std::size_t v = require_index(require_key(e, key), at + "." + key);
      if (v >= t.dims()[idx.size()])
        throw SchemaError(at + "." + key + ": index " + std::to_string(v) + " out of range");
      idx.push_back(v);
    }
    Scalar c = parse_coeff(require_key(e, "c"), f, at + ".c");
    if (!t.at(idx).is_zero()) throw SchemaError(at + ": duplicate index");
    t.set(idx, std::move(c));
  }
  return t;
}

json entries_json(const SparseTensor& t, const std::vector<std::string>& keys) {
  json arr = json::array();
  for (const auto& [idx, c] : t.entries()) {
    json e;
    for (std::size_t s = 0; s < keys.size(); ++s) e[keys[s]] = idx[s];
    e["c"] = c.str();
    arr.push_back(std::move(e));
  }
  return arr;
}

Vec parse_coeff_map(const json& j, const std::vector<std::string>& basis, const Field& f,
                    const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object keyed by basis label");
  Vec v({basis.size()}, f);
  for (const auto& [label, coeff] : j.items()) {
    auto it = std::find(basis.begin(), basis.end(), label);
    if (it == basis.end())
      throw SchemaError(where + ": unknown basis label \"" + label + "\"");
    v.set({static_cast<std::size_t>(it - basis.begin())},
          parse_coeff(coeff, f, where + "." + label));
  }
  return v;
}

json coeff_map_json(const Vec& v, const std::vector<std::string>& basis) {
  json j = json::object();
  for (const auto& [idx, c] : v.entries()) j[basis[idx[0]]] = c.str();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string resolve_ref(const std::string& ref, const std::string& referencing_file) {
  std::filesystem::path p(ref);
  if (p.is_absolute()) return ref;
  return (std::filesystem::path(referencing_file).parent_path() / p).string();
}

json tensor_json(const SparseTensor& t) {
  json j;
  j["dims"] = t.dims();
  json arr = json::array();
  for (const auto& [idx, c] : t.entries()) {
    json e;
    e["i"] = idx;
    e["c"] = c.str();
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write file: " + path);
  out << text;
}

FiniteGroup parse_group(const std::string& text) {
  json j = parse_json(text);
  const json& elements = require_key(j, "elements");
  const json& table = require_key(j, "table");
  if (!elements.is_array()) throw SchemaError("elements: expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i)
    labels.push_back(require_string(elements[i], "elements[" + std::to_string(i) + "]"));
  if (!table.is_array()) throw SchemaError("table: expected an array of rows");
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!table[r].is_array()) throw SchemaError("table[" + std::to_string(r) + "]: expected a row");
    std::vector<std::size_t> row;
    for (std::size_t c = 0; c < table[r].size(); ++c)
      row.push_back(require_index(table[r][c],
                                  "table[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  try {
    return FiniteGroup(std::move(labels), std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("table: ") + e.what());
  }
}

std::string serialize_group(const FiniteGroup& g) {
  json j;
  j["elements"] = g.labels();
  j["table"] = g.table();
  return dump(j);
}

ParsedAlgebra parse_algebra(const std::string& text, std::optional<Field> field) {
  json j = parse_json(text);
  Field f = field ? *field : parse_field(require_key(j, "field"));
  const bool shorthand = j.contains("group") || j.contains("build");
  const char* explicit_keys[] = {"basis", "unit", "counit", "mult", "comult", "antipode"};
  for (const auto* key : explicit_keys)
    if (shorthand && j.contains(key))
      throw SchemaError(std::string(key) + ": not allowed next to the group shorthand");

  std::string provenance;
  if (j.contains("provenance")) provenance = j["provenance"].dump();

  if (shorthand) {
    FiniteGroup g = [&] {
      try {
        return parse_group(require_key(j, "group").dump());
      } catch (const SchemaError& e) {
        throw SchemaError(std::string("group: ") + e.what());
      }
    }();
    std::string build = require_string(require_key(j, "build"), "build");
    if (build == "group_algebra") return {build_group_algebra(g, f), provenance};
    if (build == "dual_group_algebra") return {build_dual_group_algebra(g, f), provenance};
    throw SchemaError("build: unknown builder \"" + build + "\"");
  }

  const json& basis_j = require_key(j, "basis");
  if (!basis_j.is_array() || basis_j.empty())
    throw SchemaError("basis: expected a non-empty array of labels");
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < basis_j.size(); ++i)
    basis.push_back(require_string(basis_j[i], "basis[" + std::to_string(i) + "]"));
  const std::size_t n = basis.size();

  SparseTensor mult = parse_entries(require_key(j, "mult"), {n, n, n}, f, {"i", "j", "k"}, "mult");
  SparseTensor comult =
      parse_entries(require_key(j, "comult"), {n, n, n}, f, {"i", "j", "k"}, "comult");
  Vec unit = parse_coeff_map(require_key(j, "unit"), basis, f, "unit");
  Vec counit = parse_coeff_map(require_key(j, "counit"), basis, f, "counit");
  SparseTensor anti =
      parse_entries(require_key(j, "antipode"), {n, n}, f, {"j", "i"}, "antipode");
  try {
    return {FiniteHopfAlgebra({f, std::move(basis), std::move(mult), std::move(unit),
                               std::move(comult), std::move(counit),
                               LinearOperator(anti.permuted({1, 0}))}),
            provenance};
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

std::string serialize_algebra(const FiniteHopfAlgebra& a, const std::string& provenance) {
  json j;
  j["field"] = field_json(a.field());
  j["basis"] = a.basis();
  j["unit"] = coeff_map_json(a.unit_vector(), a.basis());
  j["counit"] = coeff_map_json(a.counit_vector(), a.basis());
  j["mult"] = entries_json(a.mult_tensor(), {"i", "j", "k"});
  j["comult"] = entries_json(a.comult_tensor(), {"i", "j", "k"});
  // column-major (j, i): column j lists the image of basis element j
  j["antipode"] = entries_json(a.antipode().matrix().permuted({1, 0}), {"j", "i"});
  if (!provenance.empty()) j["provenance"] = json::parse(provenance);
  return dump(j);
}

ParsedMap parse_map(const std::string& text, std::size_t expected_dim,
                    std::optional<Field> field) {
  json j = parse_json(text);
  std::string kind = require_string(require_key(j, "kind"), "kind");
  if (kind != "operator" && kind != "co-operator" && kind != "plain")
    throw SchemaError("kind: expected operator, co-operator, or plain");
  std::string ref;
  if (j.contains("algebra")) ref = require_string(j["algebra"], "algebra");
  Field f = field ? *field
                  : (j.contains("field") ? parse_field(j["field"]) : Field::rationals());
  const json& m = require_key(j, "matrix");
  if (!m.is_array() || m.empty()) throw SchemaError("matrix: expected a non-empty entry array");
  std::size_t dim = expected_dim;
  if (dim == 0) {
    for (const auto& e : m) {
      if (!e.is_object()) throw SchemaError("matrix: expected entry objects");
      for (const char* key : {"i", "j"})
        if (e.contains(key) && e[key].is_number_unsigned())
          dim = std::max(dim, e[key].get<std::size_t>() + 1);
    }
  }
  SparseTensor t = parse_entries(m, {dim, dim}, f, {"j", "i"}, "matrix");
  return {LinearOperator(t.permuted({1, 0})), std::move(kind), std::move(ref)};
}

std::string serialize_map(const LinearOperator& op, const std::string& kind,
                          const std::string& algebra_ref) {
  json j;
  j["kind"] = kind;
  if (!algebra_ref.empty()) j["algebra"] = algebra_ref;
  if (!op.field().is_rational()) j["field"] = field_json(op.field());
  j["matrix"] = entries_json(op.matrix().permuted({1, 0}), {"j", "i"});
  return dump(j);
}

FiniteHopfAlgebra load_algebra(const std::string& path, std::optional<Field> field) {
  return load_algebra_file(path, field).algebra;
}

ParsedAlgebra load_algebra_file(const std::string& path, std::optional<Field> field) {
  try {
    return parse_algebra(read_file(path), field);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

FiniteGroup load_group(const std::string& path) {
  try {
    return parse_group(read_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

ParsedMap load_map(const std::string& path, std::size_t expected_dim,
                   std::optional<Field> field) {
  try {
    return parse_map(read_file(path), expected_dim, field);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

BimoduleAction load_action(const std::string& path, std::optional<Field> field) {
  json j = [&] {
    try {
      return parse_json(read_file(path));
    } catch (const SchemaError& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }();
  try {
    FiniteHopfAlgebra h =
        load_algebra(resolve_ref(require_string(require_key(j, "h"), "h"), path), field);
    FiniteHopfAlgebra a =
        load_algebra(resolve_ref(require_string(require_key(j, "a"), "a"), path), field);
    const std::size_t nh = h.dim(), na = a.dim();
    SparseTensor left =
        parse_entries(require_key(j, "left"), {nh, na, na}, h.field(), {"i", "j", "k"}, "left");
    SparseTensor right =
        parse_entries(require_key(j, "right"), {na, nh, na}, h.field(), {"i", "j", "k"}, "right");
    return BimoduleAction(std::move(h), std::move(a), std::move(left), std::move(right));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

BicomoduleCoaction load_coaction(const std::string& path, std::optional<Field> field) {
  json j = [&] {
    try {
      return parse_json(read_file(path));
    } catch (const SchemaError& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }();
  try {
    FiniteHopfAlgebra h =
        load_algebra(resolve_ref(require_string(require_key(j, "h"), "h"), path), field);
    FiniteHopfAlgebra c =
        load_algebra(resolve_ref(require_string(require_key(j, "c"), "c"), path), field);
    const std::size_t nh = h.dim(), nc = c.dim();
    SparseTensor left =
        parse_entries(require_key(j, "left"), {nc, nh, nc}, h.field(), {"i", "j", "k"}, "left");
    SparseTensor right =
        parse_entries(require_key(j, "right"), {nc, nc, nh}, h.field(), {"i", "j", "k"}, "right");
    return BicomoduleCoaction(std::move(h), std::move(c), std::move(left), std::move(right));
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string serialize_action(const BimoduleAction& act, const std::string& h_ref,
                             const std::string& a_ref) {
  json j;
  j["h"] = h_ref;
  j["a"] = a_ref;
  j["left"] = entries_json(act.left(), {"i", "j", "k"});
  j["right"] = entries_json(act.right(), {"i", "j", "k"});
  return dump(j);
}

std::string serialize_coaction(const BicomoduleCoaction& coact, const std::string& h_ref,
                               const std::string& c_ref) {
  json j;
  j["h"] = h_ref;
  j["c"] = c_ref;
  j["left"] = entries_json(coact.left(), {"i", "j", "k"});
  j["right"] = entries_json(coact.right(), {"i", "j", "k"});
  return dump(j);
}

std::string serialize_report(const VerificationReport& rep) {
  json j;
  j["pass"] = rep.pass();
  json checks = json::array();
  for (const auto& c : rep.checks()) {
    json cj;
    cj["label"] = c.label;
    cj["equation"] = c.equation;
    cj["pass"] = c.pass;
    if (c.witness) {
      json w;
      w["inputs"] = c.witness->inputs;
      w["lhs"] = tensor_json(c.witness->lhs);
      w["rhs"] = tensor_json(c.witness->rhs);
      cj["witness"] = std::move(w);
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return dump(j);
}

std::string harness_verdict_line(const HarnessVerdict& v) {
  json j;
  j["index"] = v.index;
  j["images"] = v.images;
  j["conditions"] = v.conditions_pass;
  j["lift"] = v.lift_pass;
  return j.dump();
}

std::string harness_summary_line(const HarnessSummary& s) {
  json j;
  j["total"] = s.total;
  j["passing"] = s.passing;
  j["equivalence"] = s.equivalence;
  return j.dump();
}

std::string group_rb_map_line(const GroupRBMap& m, std::size_t index) {
  json j;
  j["index"] = index;
  j["images"] = m.images;
  return j.dump();
}

std::string fixtures_dir() {
  if (const char* env = std::getenv("HOPFRB_FIXTURES"); env && *env) return env;
#ifdef HOPFRB_DEFAULT_FIXTURES_DIR
  return HOPFRB_DEFAULT_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

std::string fixture_path(const std::string& name) {
  return (std::filesystem::path(fixtures_dir()) / name).string();
}

}  // namespace hopfrb::io
