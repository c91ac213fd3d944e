#pragma once

#include <string>

#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"
#include "patch_contact/signorini.hpp"

namespace patch_contact::cli {

/// SVG 1.1 picture of one case: patch outline, hull, CoP with its normal
/// force, zero-line with an arrow towards the separating side, and the
/// extended CoP highlighted. The view is an 800x800 canvas with a 10% margin,
/// y pointing up. Output depends only on the inputs.
std::string render_svg(const std::string& name, const Patch& patch, const Wrench& w, const Verdict& v);

}  // namespace patch_contact::cli
