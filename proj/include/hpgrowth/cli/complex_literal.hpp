// Number literals accepted on the command line and in scenario files.
#pragma once

#include <string>
#include <string_view>

#include "hpgrowth/core.hpp"

namespace hpgrowth::cli {

/// Parses "a", "a+bi", "a-bi", "bi", "+bi", "-bi" (b may be omitted: "1+i").
/// Reals use '.' as decimal separator and may carry an exponent. No
/// whitespace. Throws Error(invalid_input) on anything else.
Complex parse_complex(std::string_view text);

/// Full-string decimal parse, locale independent.
double parse_real(std::string_view text);

/// 17 significant digits, "%.17g".
std::string format_real(double v);

/// "a+bi" / "a-bi" with both parts in format_real form.
std::string format_complex(Complex z);

}  // namespace hpgrowth::cli
