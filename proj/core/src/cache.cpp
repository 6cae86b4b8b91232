#include "strata/cache.hpp"

namespace strata {

CacheEntries export_cache()
{
    CacheEntries out;
    detail::volume_cache_export(out);
    detail::hurwitz_cache_export(out);
    return out;
}

void import_cache(const CacheEntries& entries)
{
    for (const auto& [key, value] : entries) {
        auto bar = key.find('|');
        std::string kind = key.substr(0, bar);
        if (bar == std::string::npos || key.find('|', bar + 1) == std::string::npos)
            throw Error("UNKNOWN_CACHE_KEY", "malformed key '" + key + "'");
        if (kind == "hp1")
            detail::hurwitz_cache_import(key, value);
        else if (kind == "v" || kind == "vdelta" || kind == "a" || kind == "d")
            detail::volume_cache_import(key, value);
        else
            throw Error("UNKNOWN_CACHE_KEY", "unknown kind in key '" + key + "'");
    }
}

void clear_caches()
{
    detail::volume_cache_clear();
    detail::hurwitz_cache_clear();
}

} // namespace strata
