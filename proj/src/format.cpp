#include "nested/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace nested {

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_complex(ComplexValue z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string out = format_real(z.real());
  out += z.imag() < 0.0 ? '-' : '+';
  out += format_real(std::fabs(z.imag()));
  out += 'i';
  return out;
}

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ArgumentError("cannot parse complex number '" + std::string(whole) + "'");
  }
  return v;
}

// Imaginary coefficient; a bare sign means unit magnitude.
double parse_imag(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_number(text, whole);
}

}  // namespace

ComplexValue parse_complex(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw ArgumentError("empty complex number");
  if (text.back() != 'i') return {parse_number(text, whole), 0.0};
  text.remove_suffix(1);

  // The split is the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = text.size(); p-- > 1;) {
    const char c = text[p];
    if ((c == '+' || c == '-') && text[p - 1] != 'e' && text[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {0.0, parse_imag(text, whole)};
  }
  const std::string_view real_part = text.substr(0, split);
  if (real_part.empty()) throw ArgumentError("cannot parse complex number '" + std::string(whole) + "'");
  return {parse_number(real_part, whole), parse_imag(text.substr(split), whole)};
}

}  // namespace nested
