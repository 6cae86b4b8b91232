#pragma once

#include <string>

#include "strata/combinatorics.hpp"
#include "strata/memo.hpp"
#include "strata/rational.hpp"

namespace strata::detail {

// Shared store for the v, vdelta, a and d values.
Memo<std::string, Rational>& value_store();

inline std::string value_key(const std::string& kind, const Signature& mu)
{
    return kind + "|" + mu.canonical().str() + "|all";
}

} // namespace strata::detail
