#pragma once

#include <json.hpp>

#include "fracterm/numbers.hpp"
#include "fracterm/term.hpp"

namespace fracterm::detail {

using Json = nlohmann::ordered_json;

Json term_json(const Term& t);
Term term_from_json_value(const Json& j);

inline Json position_json(const Position& p) {
  Json arr = Json::array();
  for (std::size_t i : p.path()) arr.push_back(i);
  return arr;
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str(10));
}

}  // namespace fracterm::detail
