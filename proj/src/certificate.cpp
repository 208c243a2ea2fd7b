#include "nodalk/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace nodalk {

std::string to_string(Rel rel) {
  switch (rel) {
  case Rel::Less:
    return "<";
  case Rel::LessEq:
    return "<=";
  case Rel::Equal:
    return "=";
  case Rel::GreaterEq:
    return ">=";
  case Rel::Greater:
    return ">";
  }
  return "?";
}

Rel rel_from_string(const std::string& text) {
  for (Rel r : {Rel::Less, Rel::LessEq, Rel::Equal, Rel::GreaterEq, Rel::Greater})
    if (to_string(r) == text)
      return r;
  throw std::invalid_argument("unknown relation '" + text + "'");
}

bool Inequality::holds() const {
  auto c = lhs <=> rhs;
  switch (rel) {
  case Rel::Less:
    return c < 0;
  case Rel::LessEq:
    return c <= 0;
  case Rel::Equal:
    return c == 0;
  case Rel::GreaterEq:
    return c >= 0;
  case Rel::Greater:
    return c > 0;
  }
  return false;
}

std::string Inequality::str() const { return lhs.str() + " " + to_string(rel) + " " + rhs.str(); }

Inequality Inequality::parse(const std::string& text) {
  auto first = text.find(' ');
  auto second = text.find(' ', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("malformed inequality '" + text + "'");
  return {Rat::parse(text.substr(0, first)),
          rel_from_string(text.substr(first + 1, second - first - 1)),
          Rat::parse(text.substr(second + 1))};
}

bool certificate_sound(const Certificate& cert) {
  return std::all_of(cert.begin(), cert.end(), [](const CertificateEntry& e) {
    return !e.inequality || e.inequality->holds();
  });
}

} // namespace nodalk
