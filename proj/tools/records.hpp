#pragma once

#include <string>

#include "patch_contact/fields.hpp"
#include "patch_contact/signorini.hpp"

namespace patch_contact::cli {

/// Decimal form with 17 significant digits, enough to round-trip a double.
std::string format_number(double v);

/// One-line JSON verdict record. Every record carries the same fields;
/// absent values are written as null.
std::string verdict_record(const std::string& name, const Verdict& v);
/// Multi-line human-readable form of the same content.
std::string verdict_pretty(const std::string& name, const Verdict& v);

std::string regime_record(const std::string& name, const Verdict& v);
std::string regime_pretty(const std::string& name, const Verdict& v);

/// error is empty on success.
std::string synthesis_record(const std::string& name, const ForceDistribution& dist, const std::string& error);
std::string synthesis_pretty(const std::string& name, const ForceDistribution& dist, const std::string& error);

}  // namespace patch_contact::cli
