#include "galeforge/svg.hpp"

#include <algorithm>
#include <sstream>

namespace galeforge {

namespace {

constexpr long kView = 800;
constexpr long kMargin = 60;

// Fixed-point decimal with three fraction digits, computed exactly.
std::string decimal3(const Rational& v) {
  Integer scaled_num = v.num() * 1000;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v.den().get_mpz_t());
  const bool negative = sgn(q) < 0;
  Integer abs_q = abs(q);
  Integer whole = abs_q / 1000;
  Integer frac = abs_q % 1000;
  std::string f = frac.get_str();
  f.insert(f.begin(), 3 - f.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + f;
}

}  // namespace

std::string diagram_to_svg(const Diagram& x) {
  Rational min_x = x.points()[0].position.x;
  Rational max_x = min_x;
  Rational min_y = x.points()[0].position.y;
  Rational max_y = min_y;
  for (const auto& p : x.points()) {
    min_x = std::min(min_x, p.position.x);
    max_x = std::max(max_x, p.position.x);
    min_y = std::min(min_y, p.position.y);
    max_y = std::max(max_y, p.position.y);
  }
  Rational span = std::max(max_x - min_x, max_y - min_y);
  if (span.sign() == 0) {
    span = Rational(1);
  }
  const Rational scale = Rational(kView - 2 * kMargin) / span;
  const auto sx = [&](const Rational& v) { return Rational(kMargin) + (v - min_x) * scale; };
  const auto sy = [&](const Rational& v) {
    return Rational(kView - kMargin) - (v - min_y) * scale;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kView << "\" height=\"" << kView
      << "\" viewBox=\"0 0 " << kView << " " << kView << "\">\n";
  out << "  <rect width=\"" << kView << "\" height=\"" << kView << "\" fill=\"white\"/>\n";

  if (!x.black_cycle().empty()) {
    out << "  <polygon points=\"";
    bool first = true;
    for (const auto& label : x.black_cycle()) {
      const auto& p = x.point(label).position;
      if (!first) {
        out << " ";
      }
      first = false;
      out << decimal3(sx(p.x)) << "," << decimal3(sy(p.y));
    }
    out << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  }

  for (const auto& p : x.points()) {
    const std::string cx = decimal3(sx(p.position.x));
    const std::string cy = decimal3(sy(p.position.y));
    if (p.color == Color::Black) {
      out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"6\" fill=\"black\" stroke=\"black\"/>\n";
    } else {
      out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    out << "  <text x=\"" << cx << "\" y=\"" << cy
        << "\" dx=\"9\" dy=\"-9\" font-family=\"sans-serif\" font-size=\"14\">" << p.label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace galeforge
