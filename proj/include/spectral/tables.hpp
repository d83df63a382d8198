#pragma once

#include "spectral/json_io.hpp"
#include "spectral/ko_signs.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spectral {

enum class TableKind { Classic, Extended, Complete, Product };

/// "classic" | "extended" | "complete" | "product"; throws ParseError otherwise.
TableKind parse_table_kind(std::string_view name);

/// One column of a sign table. eps_dprime is empty for odd columns of the classic and
/// extended tables; `mark` is "U"/"L" on the even columns of the extended table.
struct SignColumn {
  int dim = 0;
  Sign eps = Sign::Plus;
  Sign eps_prime = Sign::Plus;
  std::optional<Sign> eps_dprime;
  std::string mark;
  /// Matching class of the complete table.
  KOClass cls;
};

/// Eight columns, dims 0..7, in the traditional single-variant presentation.
std::vector<SignColumn> classic_columns();
/// Twelve columns: even dims with ε′ = −1, even dims with ε′ = +1, then odd dims.
std::vector<SignColumn> extended_columns();

std::string render_table(TableKind kind);
Json table_to_json(TableKind kind);

/// Rendering of any 16-entry table laid out like the complete one (used by mnemonic).
std::string render_complete(const std::array<KOSigns, 16>& table);

}  // namespace spectral
