#include "hpgrowth/cli/complex_literal.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace hpgrowth::cli {

namespace {

[[noreturn]] void reject(std::string_view text, const char* why) {
  throw Error(ErrorKind::invalid_input, "bad number literal '" + std::string(text) + "': " + why);
}

double parse_part(std::string_view whole, std::string_view part) {
  if (part.empty()) reject(whole, "missing digits");
  // from_chars rejects a leading '+'.
  if (part.front() == '+') part.remove_prefix(1);
  if (part.empty() || part.front() == '+') reject(whole, "missing digits");
  double v = 0.0;
  const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
  if (ec != std::errc() || end != part.data() + part.size()) reject(whole, "not a decimal real");
  if (!std::isfinite(v)) reject(whole, "not finite");
  return v;
}

}  // namespace

double parse_real(std::string_view text) { return parse_part(text, text); }

Complex parse_complex(std::string_view text) {
  if (text.empty()) reject(text, "empty");
  if (text.back() != 'i') return {parse_part(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  const std::string_view im = split == std::string_view::npos ? body : body.substr(split);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_part(text, im);
  }
  return {re.empty() ? 0.0 : parse_part(text, re), imag};
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  const std::string im = format_real(z.imag());
  return format_real(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

}  // namespace hpgrowth::cli
