#include "rectcut/dissection_io.hpp"

#include <fstream>
#include <sstream>

namespace rectcut {

FieldDescriptor field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("field must be {\"kind\": \"rational\"} or {\"kind\": \"quadratic\", \"d\": n}");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldDescriptor::rational();
  if (kind == "quadratic") {
    if (!j.contains("d") || !j.at("d").is_number_integer()) throw ParseError("quadratic field needs an integer d");
    const auto d = j.at("d").get<std::int64_t>();
    if (d <= 1 || !is_squarefree(d)) throw ParseError("radicand must be a squarefree integer > 1");
    return FieldDescriptor::quadratic(d);
  }
  throw ParseError("unknown field kind \"" + kind + "\"");
}

Json field_to_json(const FieldDescriptor& f) {
  if (f.is_quadratic()) return Json{{"kind", "quadratic"}, {"d", f.d}};
  return Json{{"kind", "rational"}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

AnyDissection any_dissection_from_json(const Json& j) {
  try {
    const FieldDescriptor f =
        j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor::rational();
    if (f.is_quadratic()) return dissection_from_json<QuadExt>(j);
    return dissection_from_json<Rational>(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed dissection: ") + e.what());
  }
}

AnyDissection load_dissection(const std::string& path) { return any_dissection_from_json(read_json_file(path)); }

}  // namespace rectcut
