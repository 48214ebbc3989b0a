#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qf::detail {

std::string strip_whitespace(std::string_view text);

/// Parses a polynomial such as `t^3+2*t+1` (whitespace already removed).
/// Coefficients are reduced mod p; result is little-endian and trimmed.
/// `offset` is added to reported error positions.
std::vector<std::uint64_t> parse_poly(std::string_view text, char var, std::uint64_t p,
                                      std::size_t offset = 0);

/// Renders a little-endian coefficient vector, highest degree first; "0" for zero.
std::string render_poly(std::span<const std::uint64_t> coeffs, char var);

}  // namespace qf::detail
