#pragma once

// Deterministic number and multivector text rendering: 12 significant
// digits, negative zero printed as 0.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fermiga/multivector.hpp"

namespace fermiga {

inline constexpr int kPrintDigits = 12;

// Value as it will be printed: rounded to 12 significant digits, -0 -> 0.
[[nodiscard]] inline double printable(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

[[nodiscard]] inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, printable(x));
  return buf;
}

// "(re+imi)" / "(re-imi)".
[[nodiscard]] inline std::string format_complex(std::complex<double> c) {
  const double im = printable(c.imag());
  std::string s = "(" + format_real(c.real());
  s += (std::signbit(im) ? "-" : "+");
  s += format_real(std::abs(im)) + "i)";
  return s;
}

// Compact matrix-entry form: real part only when the imaginary part prints as 0.
[[nodiscard]] inline std::string format_entry(std::complex<double> c) {
  if (printable(c.imag()) == 0.0)
    return format_real(c.real());
  return format_complex(c);
}

// "(1+0i)1 + (-2+0i)e1e2", terms in canonical blade order; "0" when empty.
[[nodiscard]] inline std::string to_string(const Multivector &a) {
  if (a.is_zero())
    return "0";
  std::string s;
  for (const auto &[blade, c] : a.canonical_terms()) {
    if (!s.empty())
      s += " + ";
    s += format_complex(c) + to_string(blade);
  }
  return s;
}

} // namespace fermiga
