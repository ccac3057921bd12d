#include "kp3/rational.hpp"

#include <stdexcept>

namespace kp3 {

std::string rational_to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return std::invalid_argument("malformed rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw bad();
    std::size_t start = part[0] == '-' || part[0] == '+' ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
    }
    return BigInt(part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(num, den);
}

}  // namespace kp3
