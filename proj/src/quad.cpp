#include "torcoh/quad.hpp"

namespace torcoh {

std::string quad_to_string(const Quad& x) {
  if (x.is_rational()) return rat_to_string(x.a);
  std::string irr = rat_to_string(x.b < 0 ? -x.b : x.b) + "*sqrt(" + std::to_string(x.d) + ")";
  if (x.a == 0) return (x.b < 0 ? "-" : "") + irr;
  return rat_to_string(x.a) + (x.b < 0 ? "-" : "+") + irr;
}

// Accepted forms: "a", "b*sqrt(d)", "a+b*sqrt(d)", "a-b*sqrt(d)".
Quad quad_from_string(const std::string& s, long expected_d) {
  auto parse_irr = [&](const std::string& part, bool negate) -> Quad {
    auto star = part.find("*sqrt(");
    if (star == std::string::npos || part.back() != ')')
      throw InputError("bad quadratic literal '" + s + "'");
    Rat b = rat_from_string(part.substr(0, star));
    std::string dstr = part.substr(star + 6, part.size() - star - 7);
    long d = 0;
    try {
      d = std::stol(dstr);
    } catch (...) {
      throw InputError("bad discriminant in '" + s + "'");
    }
    if (expected_d != 0 && d != expected_d)
      throw InputError("literal '" + s + "' uses sqrt(" + dstr + "), field is sqrt(" + std::to_string(expected_d) + ")");
    return Quad(Rat(0), negate ? Rat(-b) : b, d);
  };

  if (s.find("sqrt") == std::string::npos) return Quad(rat_from_string(s));

  // Split at the last '+' or '-' that is not leading and not inside "sqrt(".
  auto sqrt_pos = s.find("*sqrt(");
  for (std::size_t i = sqrt_pos; i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      Rat a = rat_from_string(s.substr(0, i));
      Quad irr = parse_irr(s.substr(i + 1), s[i] == '-');
      return Quad(a, irr.b, irr.d);
    }
  }
  return parse_irr(s, false);
}

}  // namespace torcoh
