#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace strata {

// Get-or-compute table. The lock is not held while computing, so recursive
// computations are fine; a racing duplicate computation yields the same
// value and the first insert wins.
template <class K, class V>
class Memo {
public:
    template <class F>
    V get(const K& key, F&& compute)
    {
        {
            std::lock_guard lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end())
                return it->second;
        }
        V value = compute();
        std::lock_guard lock(mu_);
        return map_.emplace(key, std::move(value)).first->second;
    }

    std::optional<V> find(const K& key) const
    {
        std::lock_guard lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void put(const K& key, V value)
    {
        std::lock_guard lock(mu_);
        map_.insert_or_assign(key, std::move(value));
    }

    std::map<K, V> snapshot() const
    {
        std::lock_guard lock(mu_);
        return map_;
    }

    void clear()
    {
        std::lock_guard lock(mu_);
        map_.clear();
    }

private:
    mutable std::mutex mu_;
    std::map<K, V> map_;
};

} // namespace strata
