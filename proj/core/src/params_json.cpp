#include "mr6v/params_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mr6v {

namespace {

using nlohmann::json;

Rational rat_at(const json& j, const std::string& where) {
  if (!j.is_string())
    throw Error(Violation::ParseError, where + ": rationals must be strings");
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> rat_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(Violation::ParseError, where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(rat_at(item, where));
  return out;
}

Vec2 vec2_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw Error(Violation::ParseError, where + ": expected two components");
  return Vec2{rat_at(j[0], where), rat_at(j[1], where)};
}

}  // namespace

ParamsFile parse_params_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Violation::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(Violation::ParseError, "top level must be an object");
  if (!j.contains("c")) throw Error(Violation::ParseError, "missing \"c\"");

  ParamsFile out;
  out.c = rat_at(j["c"], "c");
  if (j.contains("u")) out.u = rat_list(j["u"], "u");
  if (j.contains("v")) out.v = rat_list(j["v"], "v");
  if (j.contains("boundary")) {
    const json& b = j["boundary"];
    for (const char* key : {"north", "south", "east", "west"})
      if (!b.contains(key))
        throw Error(Violation::ParseError, std::string("boundary missing \"") + key + "\"");
    out.boundary.emplace(vec2_at(b["north"], "north"), vec2_at(b["south"], "south"),
                         vec2_at(b["east"], "east"), vec2_at(b["west"], "west"));
  }
  return out;
}

ParamsFile load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Violation::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_params_json(ss.str());
}

}  // namespace mr6v
