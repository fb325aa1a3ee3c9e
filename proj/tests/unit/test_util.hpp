#pragma once

#include <map>
#include <memory>

#include "dl2/runner.hpp"

namespace dl2::test {

/// Shared per-q workspaces so test cases don't rebuild the groups.
inline const Workspace& bench(int q) {
    static std::map<int, std::unique_ptr<Workspace>> cache;
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::make_unique<Workspace>(q)).first;
    return *it->second;
}

}  // namespace dl2::test
