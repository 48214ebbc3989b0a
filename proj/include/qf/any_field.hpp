#pragma once

#include <string_view>
#include <variant>

#include "qf/extension_field.hpp"
#include "qf/prime_field.hpp"
#include "qf/rational.hpp"
#include "qf/rational_function.hpp"

namespace qf {

/// One of the supported field families, chosen at run time.
using AnyField = std::variant<RationalField, PrimeField, ExtensionField, RationalFunctionField>;

/// Parses `Q` | `GF(p)` | `GF(p^k)[;modulus=<poly in t>]` | `F2(X)`.
/// `GF(q)` with q a prime power is accepted as shorthand for the default-modulus field.
/// Throws ParseError on malformed text and InvalidField on unsupported fields.
AnyField parse_field_spec(std::string_view spec);

}  // namespace qf
