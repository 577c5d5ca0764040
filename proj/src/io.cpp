#include "koenig/io.hpp"

#include "koenig/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace koenig::io {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& where = "") {
  if (!j.is_object()) field_error(where.empty() ? "<root>" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

Poset poset_from_json(const Json& j) {
  const auto& elements = require(j, "elements");
  if (!elements.is_array()) field_error("elements", "expected an array of strings");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i)
    labels.push_back(as_string(elements[i], "elements[" + std::to_string(i) + "]"));
  std::vector<std::pair<std::string, std::string>> covers;
  if (auto it = j.find("covers"); it != j.end()) {
    if (!it->is_array()) field_error("covers", "expected an array of pairs");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto& c = (*it)[i];
      const std::string f = "covers[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 2) field_error(f, "expected a pair [lower, upper]");
      covers.emplace_back(as_string(c[0], f + "[0]"), as_string(c[1], f + "[1]"));
    }
  }
  const std::set<std::string> known(labels.begin(), labels.end());
  if (known.size() != labels.size()) field_error("elements", "duplicate labels");
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (const auto& l : {covers[i].first, covers[i].second})
      if (!known.count(l)) field_error("covers[" + std::to_string(i) + "]", "unknown element '" + l + "'");
  if (labels.size() > kMaxPosetSize) field_error("elements", "more than 64 elements");
  return Poset::from_labeled_covers(std::move(labels), covers);
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

Polyomino polyomino_from_json(const Json& j) {
  const auto& cells = require(j, "cells");
  if (!cells.is_array()) field_error("cells", "expected an array of [i, j] pairs");
  std::vector<Cell> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string f = "cells[" + std::to_string(i) + "]";
    if (!cells[i].is_array() || cells[i].size() != 2) field_error(f, "expected [i, j]");
    out.push_back({as_int(cells[i][0], f + "[0]"), as_int(cells[i][1], f + "[1]")});
  }
  return Polyomino(std::move(out));
}

Json polyomino_to_json(const Polyomino& p) {
  Json cells = Json::array();
  for (const auto& c : p.cells()) cells.push_back({c.x, c.y});
  return {{"cells", cells}};
}

Polyomino parse_polyomino_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return polyomino_from_json(parse_json(text));
  return parse_polyomino_grid(text);
}

Json certificate_to_json(const IdealGenerators& gens, const KoenigCertificate& cert) {
  Json generators = Json::array(), marking = Json::array(), tiebreak = Json::array();
  Json weights = Json::object();
  for (const auto& m : cert.marked()) {
    generators.push_back(gens.binomials.at(m.index).tag);
    marking.push_back(to_string(m.side));
  }
  for (std::size_t v = 0; v < cert.witness.weights.size(); ++v)
    weights[gens.var_names.at(v)] = to_string(cert.witness.weights[v]);
  for (auto v : cert.witness.tiebreak) tiebreak.push_back(gens.var_names.at(v));
  return {{"generators", generators},
          {"marking", marking},
          {"weights", weights},
          {"tiebreak", tiebreak},
          {"flavor", to_string(cert.witness.flavor)},
          {"height", cert.claimed_height}};
}

KoenigCertificate certificate_from_json(const IdealGenerators& gens, const Json& j) {
  KoenigCertificate c;
  const auto& generators = require(j, "generators", "certificate");
  const auto& marking = require(j, "marking", "certificate");
  if (!generators.is_array() || !marking.is_array())
    field_error("certificate", "generators and marking must be arrays");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const std::string f = "certificate.generators[" + std::to_string(i) + "]";
    const auto tag = as_string(generators[i], f);
    auto id = gens.find_tag(tag);
    if (!id) field_error(f, "unknown generator '" + tag + "'");
    c.generator_ids.push_back(*id);
  }
  for (std::size_t i = 0; i < marking.size(); ++i) {
    const std::string f = "certificate.marking[" + std::to_string(i) + "]";
    const auto s = as_string(marking[i], f);
    if (s != "first" && s != "second") field_error(f, "expected \"first\" or \"second\"");
    c.marking.push_back(s == "first" ? Side::First : Side::Second);
  }
  const auto& weights = require(j, "weights", "certificate");
  if (!weights.is_object()) field_error("certificate.weights", "expected an object");
  c.witness.weights.assign(gens.num_vars, Rational(0));
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    const std::string f = "certificate.weights." + it.key();
    auto v = gens.find_var(it.key());
    if (!v) field_error(f, "unknown variable");
    if (it->is_string())
      c.witness.weights[*v] = parse_rational(it->get<std::string>());
    else if (it->is_number_integer())
      c.witness.weights[*v] = Rational(Integer(it->get<long>()));
    else
      field_error(f, "expected \"p/q\"");
  }
  const auto& tiebreak = require(j, "tiebreak", "certificate");
  if (!tiebreak.is_array()) field_error("certificate.tiebreak", "expected an array");
  for (std::size_t i = 0; i < tiebreak.size(); ++i) {
    const std::string f = "certificate.tiebreak[" + std::to_string(i) + "]";
    auto v = gens.find_var(as_string(tiebreak[i], f));
    if (!v) field_error(f, "unknown variable");
    c.witness.tiebreak.push_back(*v);
  }
  if (auto it = j.find("flavor"); it != j.end()) c.witness.flavor = parse_order_flavor(as_string(*it, "certificate.flavor"));
  c.claimed_height = static_cast<std::size_t>(as_int(require(j, "height", "certificate"), "certificate.height"));
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace koenig::io
