#include "clifford/lang/format.hpp"

#include <cstdio>

namespace clifford::lang {

std::string blade_name(Blade b) {
  if (b.is_scalar())
    return "";
  auto idx = b.indices();
  bool wide = idx.back() > 9;
  std::string out = wide ? "e{" : "e";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (wide && i > 0)
      out += ',';
    out += std::to_string(idx[i]);
  }
  return wide ? out + "}" : out;
}

std::string format_scalar(const Scalar &c) {
  if (c.is_rational())
    return c.rational().get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", c.to_double());
  std::string s = buf;
  if (s.find_first_of(".ni") == std::string::npos) {
    auto e = s.find('e');
    s.insert(e == std::string::npos ? s.size() : e, ".0");
  }
  return s;
}

std::string format(const Multivector &a) {
  if (a.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[blade, c] : a.terms()) {
    bool negative = c.sign() < 0;
    Scalar magnitude = c.abs();
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string name = blade_name(blade);
    std::string coeff = format_scalar(magnitude);
    if (name.empty()) {
      out += coeff;
    } else if (coeff == "1" || coeff == "1.0") {
      out += name;
    } else if (magnitude.is_rational() && magnitude.is_integer()) {
      out += coeff + name;
    } else {
      out += coeff + " " + name;
    }
  }
  return out;
}

} // namespace clifford::lang
