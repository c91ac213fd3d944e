#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"

namespace patch_contact::cli {

/// Malformed or schema-invalid input. `where` names a line or a field path.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct ScenarioCase {
  std::string name;
  Wrench wrench;
  Twist twist;
};

/// A patch and the wrench/twist pairs to evaluate on it.
///
/// JSON layout:
///   {
///     "patch": {"type": "polygon", "vertices": [[x, y], ...]}
///            | {"type": "ellipse", "center": [x, y], "semi_axes": [a, b], "rotation": r},
///     "tol": 1e-9,                                    (optional)
///     "cases": [{"name": "...",
///                "wrench": [m_Tx, m_Ty, m_N, f_Tx, f_Ty, f_N],
///                "twist":  [w_Tx, w_Ty, w_N, v_Tx, v_Ty, v_N]}, ...]
///   }
struct Scenario {
  Patch patch;
  std::vector<ScenarioCase> cases;
  std::optional<double> tol;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

/// Patch-only document: the "patch" member of a scenario-shaped file.
Patch parse_patch_document(const std::string& text);
Patch load_patch(const std::string& path);

}  // namespace patch_contact::cli
