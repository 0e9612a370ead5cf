#include "burgess/common.hpp"

#include <cstdlib>

namespace burgess {

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  Rational r;
  try {
    if (slash == std::string::npos) {
      r.num = std::stoll(text);
      r.den = 1;
    } else {
      r.num = std::stoll(text.substr(0, slash));
      r.den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw precondition_error("Rational::parse: expected an integer or \"a/b\", got \"" + text + "\"");
  }
  if (r.den == 0) throw precondition_error("Rational::parse: zero denominator in \"" + text + "\"");
  if (r.den < 0) {
    r.den = -r.den;
    r.num = -r.num;
  }
  return r;
}

}  // namespace burgess
