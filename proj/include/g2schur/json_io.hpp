#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "g2schur/laurent.hpp"
#include "g2schur/polyj.hpp"
#include "g2schur/ratfun.hpp"

namespace g2schur {

using json = nlohmann::json;

inline json rat_to_json(const Rat& r) { return r.str(); }

inline Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw FormatError("rational must be encoded as a string");
  return Rat::parse(j.get<std::string>());
}

inline Exp3 exp_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("exponent triple must be an array of 3 integers");
  Exp3 e{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw FormatError("exponent triple must be an array of 3 integers");
    e[i] = j[i].get<int>();
  }
  return e;
}

inline json laurent_to_json(const LaurentPoly3& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"exp", e}, {"coeff", c.str()}});
  return arr;
}

inline LaurentPoly3 laurent_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be an array of terms");
  LaurentPoly3 p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff")) throw FormatError("malformed polynomial term");
    const Exp3 e = exp_from_json(t.at("exp"));
    const Rat c = rat_from_json(t.at("coeff"));
    if (c.is_zero()) throw FormatError("stored zero coefficient");
    if (p.terms().count(e)) throw FormatError("duplicate exponent in polynomial");
    p.add_term(e, c);
  }
  return p;
}

inline json polyj_to_json(const PolyJ& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({{"jexp", e}, {"coeff", c.str()}});
  return arr;
}

inline PolyJ polyj_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("PolyJ must be an array of terms");
  PolyJ p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("jexp") || !t.contains("coeff")) throw FormatError("malformed PolyJ term");
    p.add_term(exp_from_json(t.at("jexp")), rat_from_json(t.at("coeff")));
  }
  return p;
}

inline json dense_to_json(const DensePoly1& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline json ratfun_to_json(const RatFun1& r) { return {{"num", dense_to_json(r.num())}, {"den", dense_to_json(r.den())}}; }

// Canonical text: sorted keys, one-space indent, trailing newline.
inline std::string canonical_dump(const json& j) { return j.dump(1) + "\n"; }

inline std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write file: " + path);
  out << text;
  if (!out) throw FormatError("write failed: " + path);
}

inline json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace g2schur
