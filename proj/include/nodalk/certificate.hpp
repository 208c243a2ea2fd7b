#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodalk/rational.hpp"

namespace nodalk {

enum class Rel { Less, LessEq, Equal, GreaterEq, Greater };

std::string to_string(Rel rel);
Rel rel_from_string(const std::string& text);

/// An instantiated inequality between exact rationals.
struct Inequality {
  Rat lhs;
  Rel rel = Rel::Equal;
  Rat rhs;

  bool holds() const;
  /// "4/5 < 1"
  std::string str() const;
  static Inequality parse(const std::string& text);

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// One step of a verdict's justification.
struct CertificateEntry {
  std::string rule_id;
  std::string citation;
  std::string statement;
  std::optional<Inequality> inequality;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

using Certificate = std::vector<CertificateEntry>;

/// True when every recorded inequality re-evaluates to true.
bool certificate_sound(const Certificate& cert);

} // namespace nodalk
