#include "cgv/rational.hpp"

#include <regex>

#include "cgv/graph.hpp"

namespace cgv {

Rational parse_rational(std::string_view text) {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  std::string s(text);
  if (!std::regex_match(s, re)) throw InputError("not a rational number: '" + s + "'");
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0)
    throw InputError("zero denominator in '" + s + "'");
  Rational r(s);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const Vec3& v) {
  return "(" + format_rational(v.x) + ", " + format_rational(v.y) + ", " + format_rational(v.z) + ")";
}

}  // namespace cgv
