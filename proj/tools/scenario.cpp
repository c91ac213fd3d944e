#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace patch_contact::cli {

namespace {

using nlohmann::json;

std::string line_of(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] parse error at line .., column ..: ".
    if (auto colon = message.find(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw ScenarioError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), message);
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ScenarioError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(path + "." + key, "missing field");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ScenarioError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ScenarioError(path, "expected a finite number");
  return v;
}

std::vector<double> numbers(const json& j, std::size_t count, const std::string& path) {
  if (!j.is_array() || j.size() != count)
    throw ScenarioError(path, "expected an array of " + std::to_string(count) + " numbers");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Vec2 point(const json& j, const std::string& path) {
  const auto v = numbers(j, 2, path);
  return {v[0], v[1]};
}

Patch patch_from(const json& j, const std::string& path) {
  const json& type = member(j, "type", path);
  if (!type.is_string()) throw ScenarioError(path + ".type", "expected \"polygon\" or \"ellipse\"");
  const std::string kind = type.get<std::string>();
  try {
    if (kind == "polygon") {
      const json& verts = member(j, "vertices", path);
      if (!verts.is_array() || verts.empty())
        throw ScenarioError(path + ".vertices", "expected a non-empty array of [x, y] points");
      std::vector<Vec2> pts;
      for (std::size_t i = 0; i < verts.size(); ++i)
        pts.push_back(point(verts[i], path + ".vertices[" + std::to_string(i) + "]"));
      return Patch::polygon(std::move(pts));
    }
    if (kind == "ellipse") {
      const Vec2 center = point(member(j, "center", path), path + ".center");
      const auto axes = numbers(member(j, "semi_axes", path), 2, path + ".semi_axes");
      double rotation = 0.0;
      if (j.contains("rotation")) rotation = number(j["rotation"], path + ".rotation");
      return Patch::ellipse(center, axes[0], axes[1], rotation);
    }
  } catch (const InvalidPatch& e) {
    throw ScenarioError(path, e.what());
  }
  throw ScenarioError(path + ".type", "unknown patch type \"" + kind + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ScenarioError("$", "expected a JSON object at top level");

  Scenario scenario{patch_from(member(doc, "patch", "$"), "$.patch"), {}, std::nullopt};
  if (doc.contains("tol")) {
    const double tol = number(doc["tol"], "$.tol");
    if (tol < 0.0) throw ScenarioError("$.tol", "tolerance must be nonnegative");
    scenario.tol = tol;
  }

  const json& cases = member(doc, "cases", "$");
  if (!cases.is_array() || cases.empty()) throw ScenarioError("$.cases", "expected a non-empty array of cases");
  std::set<std::string> names;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const std::string path = "$.cases[" + std::to_string(i) + "]";
    const json& c = cases[i];
    const json& name = member(c, "name", path);
    if (!name.is_string() || name.get<std::string>().empty())
      throw ScenarioError(path + ".name", "expected a non-empty string");
    if (!names.insert(name.get<std::string>()).second)
      throw ScenarioError(path + ".name", "duplicate case name \"" + name.get<std::string>() + "\"");

    const auto w = numbers(member(c, "wrench", path), 6, path + ".wrench");
    const auto t = numbers(member(c, "twist", path), 6, path + ".twist");
    ScenarioCase sc;
    sc.name = name.get<std::string>();
    sc.wrench = Wrench{{w[0], w[1]}, w[2], {w[3], w[4]}, w[5]};
    sc.twist = Twist{{t[0], t[1]}, t[2], {t[3], t[4]}, t[5]};
    scenario.cases.push_back(std::move(sc));
  }
  return scenario;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

Patch parse_patch_document(const std::string& text) {
  const json doc = parse_json(text);
  return patch_from(member(doc, "patch", "$"), "$.patch");
}

Patch load_patch(const std::string& path) { return parse_patch_document(read_file(path)); }

}  // namespace patch_contact::cli
