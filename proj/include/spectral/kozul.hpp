#pragma once

#include "spectral/errors.hpp"

#include <string>
#include <string_view>

namespace spectral {

/// Which factor's degree weights the crossing sign. First: (−1)^{|a₁″||a₂′|}, which for
/// triples selects {D, J}; Second: (−1)^{|a₁′||a₂″|}, selecting {D̃, J̃}.
enum class KozulConvention { First, Second };

inline std::string to_string(KozulConvention k) { return k == KozulConvention::First ? "first" : "second"; }

/// "first" / "second"; throws ParseError otherwise.
inline KozulConvention parse_convention(std::string_view text) {
  if (text == "first") return KozulConvention::First;
  if (text == "second") return KozulConvention::Second;
  throw ParseError("unknown Kozul convention '" + std::string(text) + "' (expected first|second)");
}

}  // namespace spectral
