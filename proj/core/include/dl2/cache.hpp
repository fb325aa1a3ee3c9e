#pragma once

#include <string>

#include "dl2/dlchar.hpp"

namespace dl2 {

inline constexpr int kCacheFormatVersion = 1;

/// Persistent computation cache; disabled when dir is empty. Entries are
/// versioned JSON files keyed by (group kind, q, det order); stale versions
/// are ignored and corrupt files are recomputed and overwritten with a
/// warning. Writes go through a temp file and an atomic rename.
struct CacheConfig {
    std::string dir;
    bool enabled() const { return !dir.empty(); }
};

std::string group_cache_path(const CacheConfig& cfg, const FieldTower& t,
                             GroupKind kind, int det_order);
std::string green_cache_path(const CacheConfig& cfg, const GroupModel& g);

/// build_group with the class partition served from the cache when possible.
GroupModel build_group_cached(const FieldTower& t, GroupKind kind, int det_order,
                              const CacheConfig& cfg);

/// Validated Green table, skipping the orthogonality revalidation when a
/// previously validated table matching the closed forms is on disk.
GreenTable green_table_cached(const GroupModel& g, const CacheConfig& cfg);

}  // namespace dl2
