#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobhecke/category.hpp"
#include "frobhecke/oracle.hpp"
#include "frobhecke/parse.hpp"
#include "frobhecke/session.hpp"
#include "json.hpp"

namespace fht {

using nlohmann::json;

inline json load_frozen() {
  std::ifstream in(std::string(FH_TEST_DATA) + "/frozen.json");
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

// frozen table key -> builtin name
inline const std::vector<std::pair<std::string, std::string>>& builtins() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"ground", "ground"},
      {"clifford_even", "clifford_even"},
      {"clifford_odd", "clifford_odd"},
      {"grassmann", "grassmann"},
      {"group_c2", "group:c2"},
  };
  return v;
}

inline fh::Vec jvec(const json& j) {
  fh::Vec v;
  for (auto& e : j) v.push_back(fh::rat_parse(e.get<std::string>()));
  return v;
}

inline fh::Mat jmat(const json& j) {
  fh::Mat m;
  for (auto& row : j) m.push_back(jvec(row));
  return m;
}

}  // namespace fht
