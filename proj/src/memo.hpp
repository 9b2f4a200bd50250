#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "qedtrees/tree.hpp"

namespace qedtrees::detail {

// Per-tree memo table. The value is computed without holding the lock, so
// `compute` may recurse into the same table; a racing duplicate computation
// is discarded. References stay valid (node-based map, entries never erased).
template <typename Value>
class TreeMemo {
public:
    template <typename Compute>
    const Value& get(Tree key, Compute&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value value = std::forward<Compute>(compute)();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<Tree, Value, TreeHash> table_;
};

} // namespace qedtrees::detail
