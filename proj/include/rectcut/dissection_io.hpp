#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "rectcut/dissection.hpp"
#include "rectcut/quad_ext.hpp"
#include "rectcut/rational.hpp"
#include "rectcut/scalar_io.hpp"

namespace rectcut {

using Json = nlohmann::ordered_json;

FieldDescriptor field_from_json(const Json& j);
Json field_to_json(const FieldDescriptor& f);

/// Reads and parses a JSON file; parse failures become ParseError.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

namespace detail {

template <class K>
K scalar_from_json(const Json& j, const FieldDescriptor& f, const char* what) {
  if (j.is_string()) return parse_scalar<K>(j.get<std::string>(), f);
  if (j.is_number_integer()) return K(j.get<long long>());
  throw ParseError(std::string(what) + " must be a scalar string");
}

template <class K>
std::optional<K> optional_scalar(const Json& obj, const char* key, const FieldDescriptor& f) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  return scalar_from_json<K>(obj.at(key), f, key);
}

}  // namespace detail

template <OrderedField K>
Dissection<K> dissection_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("dissection must be a JSON object");
  Dissection<K> d;
  d.field = j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor::rational();
  if (j.contains("big") && !j.at("big").is_null()) {
    const Json& big = j.at("big");
    if (!big.is_object()) throw ParseError("\"big\" must be an object");
    d.big_w = detail::optional_scalar<K>(big, "w", d.field);
    d.big_h = detail::optional_scalar<K>(big, "h", d.field);
  }
  if (!j.contains("tiles") || !j.at("tiles").is_array()) throw ParseError("\"tiles\" must be an array");
  for (const Json& jt : j.at("tiles")) {
    if (!jt.is_object()) throw ParseError("tile must be an object");
    Tile<K> t;
    if (!jt.contains("id") || !jt.at("id").is_number_integer()) throw ParseError("tile needs an integer id");
    t.id = jt.at("id").get<int>();
    const std::string name = "tile " + std::to_string(t.id);
    if (!jt.contains("aspect")) throw ParseError(name + " has no aspect");
    t.aspect = detail::scalar_from_json<K>(jt.at("aspect"), d.field, "aspect");
    if (jt.contains("rect") && !jt.at("rect").is_null()) {
      const Json& r = jt.at("rect");
      if (!r.is_array() || r.size() != 4) throw ParseError(name + ": rect must hold four scalars");
      t.rect = ExactRect<K>{detail::scalar_from_json<K>(r[0], d.field, "rect"),
                            detail::scalar_from_json<K>(r[1], d.field, "rect"),
                            detail::scalar_from_json<K>(r[2], d.field, "rect"),
                            detail::scalar_from_json<K>(r[3], d.field, "rect")};
    }
    if (jt.contains("sketch") && !jt.at("sketch").is_null()) {
      const Json& s = jt.at("sketch");
      if (!s.is_array() || s.size() != 4) throw ParseError(name + ": sketch must hold four numbers");
      for (const Json& v : s) {
        if (!v.is_number()) throw ParseError(name + ": sketch must hold four numbers");
      }
      t.sketch = {s[0].get<double>(), s[1].get<double>(), s[2].get<double>(), s[3].get<double>()};
    } else if (t.rect) {
      t.sketch = {t.rect->x.to_double(), t.rect->y.to_double(), t.rect->w.to_double(), t.rect->h.to_double()};
    } else {
      throw ParseError(name + " has neither sketch nor rect");
    }
    d.tiles.push_back(std::move(t));
  }
  return d;
}

template <OrderedField K>
Json dissection_to_json(const Dissection<K>& d) {
  auto opt = [](const std::optional<K>& v) { return v ? Json(format_scalar(*v)) : Json(nullptr); };
  Json out;
  out["field"] = field_to_json(d.field);
  out["big"] = Json{{"w", opt(d.big_w)}, {"h", opt(d.big_h)}};
  Json tiles = Json::array();
  for (const Tile<K>& t : d.tiles) {
    Json jt;
    jt["id"] = t.id;
    jt["sketch"] = Json::array({t.sketch.x, t.sketch.y, t.sketch.w, t.sketch.h});
    jt["aspect"] = format_scalar(t.aspect);
    if (t.rect) {
      jt["rect"] = Json::array(
          {format_scalar(t.rect->x), format_scalar(t.rect->y), format_scalar(t.rect->w), format_scalar(t.rect->h)});
    } else {
      jt["rect"] = nullptr;
    }
    tiles.push_back(std::move(jt));
  }
  out["tiles"] = std::move(tiles);
  return out;
}

/// A dissection over whichever field its file declares.
using AnyDissection = std::variant<Dissection<Rational>, Dissection<QuadExt>>;

AnyDissection any_dissection_from_json(const Json& j);
AnyDissection load_dissection(const std::string& path);

}  // namespace rectcut
