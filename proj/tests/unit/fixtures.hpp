#pragma once

#include <cstdlib>
#include <string>

#include "rectcut/dissection_io.hpp"

namespace rectcut::testing {

inline std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("RECTCUT_FIXTURES");
  return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

template <OrderedField K>
Dissection<K> load_fixture(const std::string& name) {
  return dissection_from_json<K>(read_json_file(fixture_path(name)));
}

}  // namespace rectcut::testing
