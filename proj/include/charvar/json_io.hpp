#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "charvar/word.hpp"

namespace charvar {

// Parsed input file:
//   { "generators": ["a", "b"],
//     "relators":   ["abaBAB"],
//     "boundary":   [{"name": "c", "word": "abAB", "genus": 1}],
//     "phi":        {"a": "ab", "b": "bab"},
//     "point":      {"x": "3", "y": "3/2", "z": "3"} }
// Rationals are strings "p/q" (or plain integers) so values stay bit-exact.
struct InputFile {
  Presentation presentation;
  std::optional<std::map<char, Word>> phi;
  std::optional<std::map<std::string, Rat>> point;
};

inline Rat rat_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw input_error("expected a rational string for " + what);
}

inline InputFile parse_input_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("input file must be a JSON object");
  static const std::set<std::string> known{"generators", "relators", "boundary", "phi", "point"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw input_error("unknown key '" + key + "' in input file");
  }

  InputFile in;
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw input_error("input file needs a 'generators' array");
  for (const auto& g : j.at("generators")) {
    if (!g.is_string() || g.get<std::string>().size() != 1)
      throw input_error("generators must be single-letter strings");
    const char c = g.get<std::string>()[0];
    if (c < 'a' || c > 'z') throw input_error("generators must be lowercase letters");
    if (std::count(in.presentation.generators.begin(), in.presentation.generators.end(), c))
      throw input_error(std::string("duplicate generator '") + c + "'");
    in.presentation.generators.push_back(c);
  }
  const std::set<char> gens = in.presentation.generator_set();

  if (j.contains("relators")) {
    if (!j.at("relators").is_array()) throw input_error("'relators' must be an array");
    for (const auto& r : j.at("relators")) {
      if (!r.is_string()) throw input_error("relators must be word strings");
      in.presentation.relators.push_back(parse_word(r.get<std::string>(), gens));
    }
  }

  if (j.contains("boundary")) {
    if (!j.at("boundary").is_array()) throw input_error("'boundary' must be an array");
    for (const auto& b : j.at("boundary")) {
      if (!b.is_object() || !b.contains("name") || !b.contains("word") || !b.contains("genus"))
        throw input_error("boundary entries need 'name', 'word' and 'genus'");
      BoundaryCurve c;
      c.name = b.at("name").get<std::string>();
      c.word = parse_word(b.at("word").get<std::string>(), gens);
      if (!b.at("genus").is_number_integer() || b.at("genus").get<int>() < 1)
        throw input_error("boundary genus must be a positive integer");
      c.genus = b.at("genus").get<int>();
      in.presentation.boundary.push_back(std::move(c));
    }
  }

  if (j.contains("phi")) {
    if (!j.at("phi").is_object()) throw input_error("'phi' must be an object");
    std::map<char, Word> phi;
    for (const auto& [key, value] : j.at("phi").items()) {
      if (key.size() != 1 || !gens.count(key[0]))
        throw input_error("phi keys must be declared generators");
      phi.emplace(key[0], parse_word(value.get<std::string>(), gens));
    }
    for (char g : gens)
      if (!phi.count(g)) throw input_error(std::string("phi is missing generator '") + g + "'");
    in.phi = std::move(phi);
  }

  if (j.contains("point")) {
    if (!j.at("point").is_object()) throw input_error("'point' must be an object");
    std::map<std::string, Rat> pt;
    for (const auto& [key, value] : j.at("point").items())
      pt.emplace(key, rat_from_json(value, "point." + key));
    for (const std::string v : {"x", "y", "z"})
      if (!pt.count(v)) throw input_error("point must assign x, y and z");
    in.point = std::move(pt);
  }

  return in;
}

inline InputFile load_input_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open input file '" + path + "'");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_input_json(j);
}

}  // namespace charvar
