#pragma once

#include <string>
#include <variant>

#include "rectcut/correspondence.hpp"
#include "rectcut/dissection_io.hpp"

namespace rectcut {

// {"field": {...}, "R": scalar-string, "c": [rational-strings]}

template <OrderedField K>
LadderSpec<K> ladder_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("ladder spec must be a JSON object");
  LadderSpec<K> spec;
  spec.field = j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor::rational();
  if (!j.contains("R")) throw ParseError("ladder spec has no R");
  spec.R = detail::scalar_from_json<K>(j.at("R"), spec.field, "R");
  if (!j.contains("c") || !j.at("c").is_array() || j.at("c").empty()) {
    throw ParseError("ladder spec needs a nonempty array \"c\"");
  }
  for (const Json& c : j.at("c")) spec.c.push_back(detail::scalar_from_json<Rational>(c, FieldDescriptor::rational(), "c"));
  return spec;
}

template <OrderedField K>
Json ladder_to_json(const LadderSpec<K>& spec) {
  Json c = Json::array();
  for (const Rational& v : spec.c) c.push_back(format_scalar(v));
  return Json{{"field", field_to_json(spec.field)}, {"R", format_scalar(spec.R)}, {"c", std::move(c)}};
}

using AnyLadder = std::variant<LadderSpec<Rational>, LadderSpec<QuadExt>>;

inline AnyLadder any_ladder_from_json(const Json& j) {
  try {
    const FieldDescriptor f =
        j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor::rational();
    if (f.is_quadratic()) return ladder_from_json<QuadExt>(j);
    return ladder_from_json<Rational>(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ladder spec: ") + e.what());
  }
}

inline AnyLadder load_ladder(const std::string& path) { return any_ladder_from_json(read_json_file(path)); }

}  // namespace rectcut
