#include "records.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace patch_contact::cli {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string vec(Vec2 v) { return "[" + format_number(v.x) + "," + format_number(v.y) + "]"; }

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string optional_vec(const std::optional<Vec2>& v) { return v ? vec(*v) : "null"; }

std::string zero_line_json(const std::optional<ZeroLine>& line) {
  if (!line) return "null";
  return "{\"normal\":" + vec(line->normal) + ",\"offset\":" + format_number(line->offset) + "}";
}

std::string extended_cop_json(const ExtendedCop& ecop) {
  if (const Vec2* p = std::get_if<Vec2>(&ecop)) return "{\"kind\":\"point\",\"points\":[" + vec(*p) + "]}";
  const SupportSet& s = std::get<SupportSet>(ecop);
  switch (s.kind) {
    case SupportSet::Kind::vertex:
      return "{\"kind\":\"vertex\",\"points\":[" + vec(s.first) + "]}";
    case SupportSet::Kind::segment:
      return "{\"kind\":\"segment\",\"points\":[" + vec(s.first) + "," + vec(s.second) + "]}";
    case SupportSet::Kind::full_hull:
      break;
  }
  return "{\"kind\":\"full_hull\",\"points\":[]}";
}

std::string extended_cop_text(const ExtendedCop& ecop) {
  if (const Vec2* p = std::get_if<Vec2>(&ecop)) return "point " + vec(*p);
  const SupportSet& s = std::get<SupportSet>(ecop);
  switch (s.kind) {
    case SupportSet::Kind::vertex:
      return "vertex " + vec(s.first);
    case SupportSet::Kind::segment:
      return "segment " + vec(s.first) + " -- " + vec(s.second);
    case SupportSet::Kind::full_hull:
      break;
  }
  return "full hull";
}

std::string regime_name(const Verdict& v) { return v.regime ? to_string(v.regime->kind) : "none"; }

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string verdict_record(const std::string& name, const Verdict& v) {
  std::ostringstream out;
  out << "{\"case\":" << quoted(name) << ",\"satisfied\":" << boolean(v.satisfied)
      << ",\"primal_ok\":" << boolean(v.primal_ok) << ",\"dual_ok\":" << boolean(v.dual_ok)
      << ",\"residual\":" << format_number(v.residual) << ",\"scale\":" << format_number(v.scale)
      << ",\"regime\":" << (v.regime ? quoted(to_string(v.regime->kind)) : "null")
      << ",\"tangential_motion\":" << (v.regime ? boolean(v.regime->tangential_motion) : "null")
      << ",\"cop\":" << optional_vec(v.cop) << ",\"zero_line\":" << zero_line_json(v.zero_line)
      << ",\"extended_cop\":" << extended_cop_json(v.extended_cop) << "}";
  return out.str();
}

std::string verdict_pretty(const std::string& name, const Verdict& v) {
  std::ostringstream out;
  out << "case " << name << "\n"
      << "  satisfied          " << boolean(v.satisfied) << "\n"
      << "  wrench in K_P      " << boolean(v.primal_ok) << "\n"
      << "  twist in K_P*      " << boolean(v.dual_ok) << "\n"
      << "  residual           " << format_number(v.residual) << "\n"
      << "  regime             " << regime_name(v);
  if (v.regime && v.regime->tangential_motion) out << " (with tangential motion)";
  out << "\n  center of pressure " << (v.cop ? vec(*v.cop) : "undefined") << "\n"
      << "  zero-line          ";
  if (v.zero_line)
    out << "normal " << vec(v.zero_line->normal) << " offset " << format_number(v.zero_line->offset);
  else
    out << "none";
  out << "\n  extended CoP       " << extended_cop_text(v.extended_cop) << "\n";
  return out.str();
}

std::string regime_record(const std::string& name, const Verdict& v) {
  std::ostringstream out;
  out << "{\"case\":" << quoted(name);
  if (v.regime) {
    out << ",\"regime\":" << quoted(to_string(v.regime->kind))
        << ",\"tangential_motion\":" << boolean(v.regime->tangential_motion)
        << ",\"wrench_norm\":" << format_number(v.regime->wrench_norm)
        << ",\"twist_norm\":" << format_number(v.regime->twist_norm) << ",\"error\":null}";
  } else {
    out << ",\"regime\":null,\"tangential_motion\":null,\"wrench_norm\":null,\"twist_norm\":null"
        << ",\"error\":\"not_complementary\"}";
  }
  return out.str();
}

std::string regime_pretty(const std::string& name, const Verdict& v) {
  if (!v.regime) return name + ": not complementary\n";
  return name + ": " + to_string(v.regime->kind) + (v.regime->tangential_motion ? " (with tangential motion)" : "") +
         "\n";
}

std::string synthesis_record(const std::string& name, const ForceDistribution& dist, const std::string& error) {
  std::ostringstream out;
  out << "{\"case\":" << quoted(name) << ",\"atoms\":";
  if (!error.empty()) {
    out << "null,\"error\":" << quoted(error) << "}";
    return out.str();
  }
  out << "[";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const ContactAtom& a = dist.atoms()[i];
    if (i) out << ",";
    out << "{\"point\":" << vec(a.point) << ",\"rho_n\":" << format_number(a.rho_n) << "}";
  }
  out << "],\"error\":null}";
  return out.str();
}

std::string synthesis_pretty(const std::string& name, const ForceDistribution& dist, const std::string& error) {
  std::ostringstream out;
  out << "case " << name << "\n";
  if (!error.empty()) {
    out << "  error: " << error << "\n";
    return out.str();
  }
  if (dist.empty()) out << "  no atoms (zero normal force)\n";
  for (const ContactAtom& a : dist.atoms()) out << "  atom at " << vec(a.point) << " rho_N " << format_number(a.rho_n) << "\n";
  return out.str();
}

}  // namespace patch_contact::cli
