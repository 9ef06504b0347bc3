#include "entgeo/rational.hpp"

#include <cctype>

#include "entgeo/errors.hpp"

namespace entgeo {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bare sign: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad integer literal: '" + s + "'");
  // strip leading zeros so the Int constructor never sees an octal prefix
  std::size_t first = s.find_first_not_of('0', start);
  if (first == std::string::npos) return Int(0);
  return Int((start > 0 && s[0] == '-' ? "-" : "") + s.substr(first));
}

}  // namespace

Rat parse_rat(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + token + "'");
    return Rat(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t places = s.size() - dot - 1;
    if (places == 0) throw ParseError("trailing dot: '" + token + "'");
    Int num = parse_int(digits);
    Int den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rat(num, den);
  }
  return Rat(parse_int(s));
}

std::string rat_str(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace entgeo
