#pragma once

#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "queens/arrangement.hpp"
#include "queens/complete.hpp"
#include "queens/compose.hpp"
#include "queens/enumerate.hpp"
#include "queens/error.hpp"
#include "queens/queen_function.hpp"

namespace queens {

// ---- plain-text formats ----------------------------------------------

// One line of space-separated integers; n is inferred from the count.
inline arrangement parse_perm_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      throw error(errc::invalid_input,
                  "not an integer in permutation: '" + token + "'");
    }
  }
  if (values.empty())
    throw error(errc::invalid_input, "empty permutation input");
  const int n = static_cast<int>(values.size());
  return arrangement{n, std::move(values)};
}

inline std::string format_perm_text(const arrangement& a) {
  std::string out;
  for (int i = 0; i < a.n; ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(a.perm[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Placement text: semicolon-separated "row,col" pairs, e.g. "1,2;2,4".
// Whitespace around numbers and a trailing separator are tolerated.
inline partial_placement parse_placement_text(int n, const std::string& text) {
  partial_placement p;
  p.n = n;
  std::istringstream pieces(text);
  std::string piece;
  while (std::getline(pieces, piece, ';')) {
    const auto first = piece.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // empty piece (trailing ';')
    const auto comma = piece.find(',');
    if (comma == std::string::npos)
      throw error(errc::invalid_input,
                  "expected 'row,col' in placement: '" + piece + "'");
    try {
      const int r = std::stoi(piece.substr(0, comma));
      const int c = std::stoi(piece.substr(comma + 1));
      p.queens.emplace_back(r, c);
    } catch (const std::exception&) {
      throw error(errc::invalid_input,
                  "expected 'row,col' in placement: '" + piece + "'");
    }
  }
  return p;
}

// ASCII board, row 1 first: 'Q' for the queen, '.' elsewhere.
inline std::string render_board(const arrangement& a) {
  require_shape(a);
  std::string out;
  out.reserve(static_cast<std::size_t>(a.n) * (a.n + 1));
  for (int i = 1; i <= a.n; ++i) {
    for (int j = 1; j <= a.n; ++j) out += (a(i) == j) ? 'Q' : '.';
    out += '\n';
  }
  return out;
}

// ---- JSON formats ----------------------------------------------------

inline nlohmann::json to_json(const arrangement& a) {
  return {{"n", a.n}, {"perm", a.perm}};
}

inline nlohmann::json to_json(const queen_function& f) {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : f.segments)
    segs.push_back({{"lo", s.lo},
                    {"hi", s.hi},
                    {"odd", {s.odd_map.a, s.odd_map.b}},
                    {"even", {s.even_map.a, s.even_map.b}}});
  return {{"n", f.n}, {"segments", std::move(segs)}};
}

inline nlohmann::json to_json(const criterion_report& r) {
  return {{"n", r.n},
          {"diff_residues", r.diff_residues},
          {"sum_residues", r.sum_residues},
          {"diff_complete", r.diff_complete},
          {"sum_complete", r.sum_complete},
          {"passes", r.passes}};
}

inline nlohmann::json to_json(const irreducibility_class& c) {
  nlohmann::json out{{"n", c.n}, {"q_irreducible", c.q_irreducible}};
  if (c.form) out["form"] = to_string(*c.form);
  if (c.factor_witness)
    out["factor_witness"] = {c.factor_witness->first,
                             c.factor_witness->second};
  return out;
}

inline nlohmann::json to_json(const std::vector<fundamental_class>& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& fc : classes)
    out.push_back({{"rep", fc.representative.perm}, {"orbit", fc.orbit_size}});
  return out;
}

inline nlohmann::json to_json(const remark_report& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [w, c] : r.width_histogram) hist[std::to_string(w)] = c;
  return {{"n", 15},
          {"solutions", r.solutions},
          {"width_histogram", std::move(hist)},
          {"min_width_observed", r.min_width_observed},
          {"prefix_partition_total", r.prefix_partition_total},
          {"passes", r.passes}};
}

inline nlohmann::json to_json(const conjecture_report& r) {
  nlohmann::json out{{"n", r.n},
                     {"applicable", r.applicable},
                     {"solutions", r.solutions},
                     {"classes", r.classes},
                     {"max_orbit_width", r.max_orbit_width},
                     {"passes", r.passes}};
  if (r.worst_representative)
    out["worst_representative"] = r.worst_representative->perm;
  return out;
}

namespace detail {
inline nlohmann::json parse_json(const std::string& text,
                                 const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::invalid_input,
                "malformed " + what + " JSON: " + e.what());
  }
}

template <class T>
T field(const nlohmann::json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw error(errc::invalid_input,
                what + " JSON needs field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw error(errc::invalid_input,
                what + " JSON field \"" + key + "\" has the wrong type");
  }
}
}  // namespace detail

inline arrangement arrangement_from_json(const nlohmann::json& j) {
  arrangement a;
  a.n = detail::field<int>(j, "n", "arrangement");
  a.perm = detail::field<std::vector<int>>(j, "perm", "arrangement");
  return a;
}

inline queen_function queen_function_from_json(const nlohmann::json& j) {
  queen_function f;
  f.n = detail::field<int>(j, "n", "queen function");
  const auto segs = detail::field<std::vector<nlohmann::json>>(
      j, "segments", "queen function");
  for (const auto& js : segs) {
    segment s;
    s.lo = detail::field<int>(js, "lo", "segment");
    s.hi = detail::field<int>(js, "hi", "segment");
    const auto odd = detail::field<std::vector<int>>(js, "odd", "segment");
    const auto even = detail::field<std::vector<int>>(js, "even", "segment");
    if (odd.size() != 2 || even.size() != 2)
      throw error(errc::invalid_input,
                  "segment maps must be [a, b] pairs");
    s.odd_map = {odd[0], odd[1]};
    s.even_map = {even[0], even[1]};
    f.segments.push_back(s);
  }
  return f;
}

// Reads an arrangement from a stream holding either the JSON object or the
// one-line permutation text; the leading character decides.
inline arrangement read_arrangement(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw error(errc::invalid_input, "empty arrangement input");
  if (text[first] == '{')
    return arrangement_from_json(detail::parse_json(text, "arrangement"));
  return parse_perm_text(text);
}

}  // namespace queens
