#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace patch_contact::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 0.1 * kCanvas;

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// World-to-canvas map fitted around a set of points.
class View {
 public:
  explicit View(const std::vector<Vec2>& pts) {
    Vec2 lo = pts.front();
    Vec2 hi = pts.front();
    for (const Vec2& p : pts) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    center_ = (lo + hi) * 0.5;
    extent_ = std::max(hi.x - lo.x, hi.y - lo.y);
    if (!(extent_ > 0.0)) extent_ = 1.0;
    scale_ = (kCanvas - 2.0 * kMargin) / extent_;
  }

  Vec2 map(Vec2 p) const {
    return {kCanvas / 2.0 + (p.x - center_.x) * scale_, kCanvas / 2.0 - (p.y - center_.y) * scale_};
  }
  double scale() const { return scale_; }
  double extent() const { return extent_; }
  Vec2 center() const { return center_; }

 private:
  Vec2 center_;
  double extent_ = 1.0;
  double scale_ = 1.0;
};

std::string points_attr(const View& view, std::span<const Vec2> pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 p = view.map(pts[i]);
    if (i) out += ' ';
    out += fixed(p.x) + "," + fixed(p.y);
  }
  return out;
}

std::vector<Vec2> ellipse_extremes(const Ellipse& e) {
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  const double hx = std::hypot(e.semi_a * c, e.semi_b * s);
  const double hy = std::hypot(e.semi_a * s, e.semi_b * c);
  return {e.center - Vec2{hx, hy}, e.center + Vec2{hx, hy}};
}

void line(std::ostringstream& out, const View& view, Vec2 a, Vec2 b, const std::string& style) {
  const Vec2 p = view.map(a);
  const Vec2 q = view.map(b);
  out << "<line x1=\"" << fixed(p.x) << "\" y1=\"" << fixed(p.y) << "\" x2=\"" << fixed(q.x) << "\" y2=\""
      << fixed(q.y) << "\" " << style << "/>\n";
}

void circle(std::ostringstream& out, const View& view, Vec2 c, double r, const std::string& style) {
  const Vec2 p = view.map(c);
  out << "<circle cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y) << "\" r=\"" << fixed(r) << "\" " << style
      << "/>\n";
}

void arrow(std::ostringstream& out, Vec2 from, Vec2 to, const std::string& color) {
  // Canvas coordinates.
  out << "<line x1=\"" << fixed(from.x) << "\" y1=\"" << fixed(from.y) << "\" x2=\"" << fixed(to.x) << "\" y2=\""
      << fixed(to.y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  const Vec2 d = to - from;
  const double len = norm(d);
  if (len == 0.0) return;
  const Vec2 u = d / len;
  const Vec2 side{-u.y, u.x};
  const Vec2 base = to - u * 10.0;
  const Vec2 l = base + side * 5.0;
  const Vec2 r = base - side * 5.0;
  out << "<polygon points=\"" << fixed(to.x) << "," << fixed(to.y) << " " << fixed(l.x) << "," << fixed(l.y) << " "
      << fixed(r.x) << "," << fixed(r.y) << "\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string render_svg(const std::string& name, const Patch& patch, const Wrench& w, const Verdict& v) {
  std::vector<Vec2> frame;
  if (patch.is_ellipse()) {
    frame = ellipse_extremes(patch.ellipse());
  } else {
    frame.assign(patch.vertices().begin(), patch.vertices().end());
  }
  if (v.cop) frame.push_back(*v.cop);
  if (const SupportSet* s = std::get_if<SupportSet>(&v.extended_cop); s && s->kind != SupportSet::Kind::full_hull) {
    frame.push_back(s->first);
    frame.push_back(s->second);
  }
  if (v.zero_line) {
    // Keep the foot of the zero-line, seen from the patch, inside the view.
    const View patch_view(frame);
    const Vec2 c = patch_view.center();
    frame.push_back(c - v.zero_line->normal * v.zero_line->signed_distance(c));
  }
  const View view(frame);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<title>" << escape(name) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";

  // Patch.
  const std::string patch_style = "fill=\"#f6d5d1\" stroke=\"#b03a2e\" stroke-width=\"2\"";
  if (patch.is_ellipse()) {
    const Ellipse& e = patch.ellipse();
    const Vec2 c = view.map(e.center);
    const double degrees = -e.rotation * 180.0 / std::numbers::pi;
    out << "<ellipse cx=\"" << fixed(c.x) << "\" cy=\"" << fixed(c.y) << "\" rx=\"" << fixed(e.semi_a * view.scale())
        << "\" ry=\"" << fixed(e.semi_b * view.scale()) << "\" transform=\"rotate(" << fixed(degrees) << " "
        << fixed(c.x) << " " << fixed(c.y) << ")\" " << patch_style << "/>\n";
  } else if (patch.vertices().size() == 1) {
    circle(out, view, patch.vertices()[0], 4.0, patch_style);
  } else if (patch.vertices().size() == 2) {
    line(out, view, patch.vertices()[0], patch.vertices()[1], "stroke=\"#b03a2e\" stroke-width=\"4\"");
  } else {
    out << "<polygon points=\"" << points_attr(view, patch.vertices()) << "\" " << patch_style << "/>\n";
  }

  // Hull, dashed, when it differs from the outline.
  if (!patch.is_ellipse() && patch.hull().size() >= 3 && patch.hull().size() != patch.vertices().size()) {
    out << "<polygon points=\"" << points_attr(view, patch.hull())
        << "\" fill=\"none\" stroke=\"#7f8c8d\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  }

  // Extended center of pressure.
  const std::string highlight = "#e67e22";
  if (const SupportSet* s = std::get_if<SupportSet>(&v.extended_cop)) {
    switch (s->kind) {
      case SupportSet::Kind::vertex:
        circle(out, view, s->first, 9.0, "fill=\"none\" stroke=\"" + highlight + "\" stroke-width=\"4\"");
        break;
      case SupportSet::Kind::segment:
        line(out, view, s->first, s->second, "stroke=\"" + highlight + "\" stroke-width=\"6\" stroke-linecap=\"round\"");
        break;
      case SupportSet::Kind::full_hull:
        if (patch.is_ellipse()) {
          const Ellipse& e = patch.ellipse();
          const Vec2 c = view.map(e.center);
          out << "<ellipse cx=\"" << fixed(c.x) << "\" cy=\"" << fixed(c.y) << "\" rx=\""
              << fixed(e.semi_a * view.scale()) << "\" ry=\"" << fixed(e.semi_b * view.scale())
              << "\" transform=\"rotate(" << fixed(-e.rotation * 180.0 / std::numbers::pi) << " " << fixed(c.x)
              << " " << fixed(c.y) << ")\" fill=\"none\" stroke=\"" << highlight << "\" stroke-width=\"4\"/>\n";
        } else if (patch.hull().size() == 1) {
          circle(out, view, patch.hull()[0], 9.0, "fill=\"none\" stroke=\"" + highlight + "\" stroke-width=\"4\"");
        } else {
          out << "<polygon points=\"" << points_attr(view, patch.hull()) << "\" fill=\"none\" stroke=\"" << highlight
              << "\" stroke-width=\"4\"/>\n";
        }
        break;
    }
  }

  // Zero-line with the arrow on the side where the normal velocity is positive.
  if (v.zero_line) {
    const ZeroLine& zl = *v.zero_line;
    const Vec2 c = view.center();
    const Vec2 foot = c - zl.normal * zl.signed_distance(c);
    const Vec2 reach = zl.direction() * (2.0 * view.extent());
    line(out, view, foot - reach, foot + reach, "stroke=\"#8e5b2d\" stroke-width=\"2\"");
    const Vec2 from = view.map(foot);
    const Vec2 to = view.map(foot + zl.normal * (40.0 / view.scale()));
    arrow(out, from, to, "#8e5b2d");
  }

  // Center of pressure with the normal force value.
  if (v.cop) {
    circle(out, view, *v.cop, 6.0, "fill=\"#000000\"");
    const Vec2 p = view.map(*v.cop);
    out << "<text x=\"" << fixed(p.x + 10.0) << "\" y=\"" << fixed(p.y - 10.0)
        << "\" font-family=\"sans-serif\" font-size=\"14\">f_N = " << fixed(w.f_n) << "</text>\n";
  }

  const std::string regime = v.regime ? to_string(v.regime->kind) : "not complementary";
  out << "<text x=\"16\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\">" << escape(name) << ": " << regime
      << "</text>\n"
      << "</svg>\n";
  return out.str();
}

}  // namespace patch_contact::cli
