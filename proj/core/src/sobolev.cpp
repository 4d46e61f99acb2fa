#include "helmsens/sobolev.hpp"

#include <cstdlib>
#include <limits>

namespace helmsens {

SobolevIndex SobolevIndex::parse(const std::string& text) {
  if (text == "inf" || text == "+inf") return infinity();
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      long long n = std::stoll(text, &pos);
      if (pos != text.size()) throw ParseError("bad index: " + text);
      return integer(n);
    }
    std::size_t pos = 0;
    long long num = std::stoll(text.substr(0, slash), &pos);
    long long den = std::stoll(text.substr(slash + 1));
    if (den != 2) throw ParseError("index denominator must be 2: " + text);
    return half(num);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad index: " + text);
  } catch (const std::out_of_range&) {
    throw ParseError("index out of range: " + text);
  }
}

double SobolevIndex::as_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return 0.5 * static_cast<double>(twice_);
}

std::string SobolevIndex::str() const {
  if (inf_) return "inf";
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace helmsens
