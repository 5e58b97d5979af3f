#include "finsurg/rational.hpp"

#include <cctype>

namespace finsurg {

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return Rational(BigInt(std::string(text)));
  }
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = text.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return Rational(BigInt(std::string(ns)), BigInt(std::string(ds)));
}

}  // namespace finsurg
