#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "chowdefect/polynomial.hpp"

namespace chowdefect {

/// Looks up a named class ("c2", "pbar5", ...) in a ring. Returns nullopt
/// for unknown names.
using AliasResolver = std::function<std::optional<Polynomial>(std::string_view, const RingPtr&)>;

/// Parses a polynomial literal: ring variable names, nonnegative integer
/// literals, + - * ^ and parentheses, whitespace ignored. Identifiers that
/// are not variables go through `resolver`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            const AliasResolver& resolver = {});

}  // namespace chowdefect
