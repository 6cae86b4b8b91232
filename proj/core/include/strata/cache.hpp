#pragma once

#include <map>
#include <string>

#include "strata/rational.hpp"

namespace strata {

// Memoized exact values keyed "<kind>|<sorted mu>|<component>", kind one of
// v, vdelta, a, d, hp1. For v and vdelta the value is the coefficient of pi^{2g}.
using CacheEntries = std::map<std::string, Rational>;

CacheEntries export_cache();
// UNKNOWN_CACHE_KEY for keys outside the grammar.
void import_cache(const CacheEntries& entries);
void clear_caches();

namespace detail {
void hurwitz_cache_export(CacheEntries& out);
void hurwitz_cache_import(const std::string& key, const Rational& value);
void hurwitz_cache_clear();
void volume_cache_export(CacheEntries& out);
void volume_cache_import(const std::string& key, const Rational& value);
void volume_cache_clear();
} // namespace detail

} // namespace strata
