#pragma once

// JSON/CSV serialization of Fock vectors and cocycle tables.
//
// FockVector: [{"unstarred":[index...],"starred":[index...],"coeff":"p/q"}, ...]
// Indices are strings: "(i,n)" for loop/qtorus/weyl, "n" for witt, "i" for gl.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockrep/fock.hpp"

namespace fockrep {

using ordered_json = nlohmann::ordered_json;

inline std::string render_index(const Index& a, const Realization& R) { return R.model().render_index(a); }

inline Index parse_index(const std::string& text, const Realization& R) {
  auto bad = [&] { return std::invalid_argument("malformed index '" + text + "' for algebra '" + to_string(R.kind()) + "'"); };
  Index out;
  try {
    if (R.kind() == AlgebraKind::witt) {
      std::size_t used = 0;
      out = Index{0, std::stoll(text, &used)};
      if (used != text.size()) throw bad();
    } else if (R.kind() == AlgebraKind::gl) {
      std::size_t used = 0;
      out = Index{std::stoi(text, &used), 0};
      if (used != text.size()) throw bad();
    } else {
      if (text.size() < 5 || text.front() != '(' || text.back() != ')') throw bad();
      auto comma = text.find(',');
      if (comma == std::string::npos) throw bad();
      std::string r = text.substr(1, comma - 1), e = text.substr(comma + 1, text.size() - comma - 2);
      std::size_t u1 = 0, u2 = 0;
      out = Index{std::stoi(r, &u1), std::stoll(e, &u2)};
      if (u1 != r.size() || u2 != e.size()) throw bad();
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (!R.model().valid_index(out)) throw std::invalid_argument("index '" + text + "' outside the module basis");
  return out;
}

inline ordered_json to_json(const FockVector& v, const Realization& R) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : v) {
    ordered_json u = ordered_json::array(), s = ordered_json::array();
    for (const auto& a : m.unstarred) u.push_back(render_index(a, R));
    for (const auto& b : m.starred) s.push_back(render_index(b, R));
    arr.push_back(ordered_json{{"unstarred", u}, {"starred", s}, {"coeff", c.str()}});
  }
  return arr;
}

/// Reads a vector whose monomials may be unsorted; each is canonicalized by
/// applying its letters to v0. Every letter must be a creation letter.
inline FockVector fock_vector_from_json(const ordered_json& j, const Realization& R) {
  if (!j.is_array()) throw std::invalid_argument("Fock vector must be a JSON array");
  FockVector out;
  for (const auto& entry : j) {
    if (!entry.is_object()) throw std::invalid_argument("Fock vector entries must be objects");
    LetterSeq letters;
    auto read = [&](const char* key, bool starred) {
      if (!entry.contains(key)) return;
      for (const auto& s : entry.at(key)) {
        if (!s.is_string()) throw std::invalid_argument(std::string("'") + key + "' entries must be strings");
        Letter l{parse_index(s.get<std::string>(), R), starred};
        if (!is_creation(l, R))
          throw std::invalid_argument("'" + s.get<std::string>() + "' is not a creation index for '" + key + "'");
        letters.push_back(l);
      }
    };
    read("unstarred", false);
    read("starred", true);
    Scalar c(1);
    if (entry.contains("coeff")) {
      const auto& cj = entry.at("coeff");
      c = cj.is_string() ? Scalar::parse(cj.get<std::string>()) : Scalar(cj.get<long>());
    }
    out.add_scaled(apply_letters(letters, vacuum(), R), c);
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct CocycleTableEntry {
  std::string x;
  std::string y;
  Scalar value;
};

struct CocycleTable {
  std::string instance;
  int rho = -1;
  std::string cut;
  std::vector<CocycleTableEntry> entries;
};

inline ordered_json to_json(const CocycleTable& t) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : t.entries) entries.push_back(ordered_json{{"x", e.x}, {"y", e.y}, {"value", e.value.str()}});
  return ordered_json{{"instance", t.instance}, {"rho", t.rho}, {"J", t.cut}, {"entries", entries}};
}

inline std::string to_csv(const CocycleTable& t) {
  std::ostringstream os;
  os << "instance,rho,J,x,y,value\n";
  for (const auto& e : t.entries)
    os << t.instance << ',' << t.rho << ',' << csv_field(t.cut) << ',' << csv_field(e.x) << ',' << csv_field(e.y)
       << ',' << e.value.str() << '\n';
  return os.str();
}

}  // namespace fockrep
