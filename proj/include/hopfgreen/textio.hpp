#pragma once

#include <sstream>
#include <string>

#include <hopfgreen/labels.hpp>

namespace hopfgreen {

/// Printed forms round-trip through the expression parser: characters as
/// `eps` / `chr(free=[...], tor=[...])`, labels as `V{t}(...)` /
/// `W{t}(...; eta=...)`, sums with `+` and integer multiplicities.

inline std::string to_string(const Character& c) {
  if (c.is_trivial()) return "eps";
  std::ostringstream os;
  os << "chr(";
  bool need_comma = false;
  if (!c.free_images().empty()) {
    os << "free=[";
    for (std::size_t i = 0; i < c.free_images().size(); ++i) {
      if (i) os << ", ";
      os << c.free_images()[i].to_string();
    }
    os << "]";
    need_comma = true;
  }
  if (!c.torsion_exponents().empty()) {
    if (need_comma) os << ", ";
    os << "tor=[";
    for (std::size_t i = 0; i < c.torsion_exponents().size(); ++i) {
      if (i) os << ", ";
      os << c.torsion_exponents()[i];
    }
    os << "]";
  }
  os << ")";
  return os.str();
}

inline std::string to_string(const Label& lab) {
  std::ostringstream os;
  if (const auto* nil = std::get_if<NilLabel>(&lab)) {
    os << "V" << nil->t << "(" << to_string(nil->lambda) << ")";
  } else {
    const auto& nn = std::get<NonNilLabel>(lab);
    os << "W" << nn.t << "(" << to_string(nn.sigma)
       << "; eta=" << nn.eta.to_string() << ")";
  }
  return os.str();
}

inline std::string to_string(const Decomposition& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lab, mult] : d) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    os << to_string(lab);
  }
  return os.str();
}

}  // namespace hopfgreen
