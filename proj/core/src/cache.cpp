#include "dl2/cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace dl2 {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string kind_tag(GroupKind kind, int det_order) {
    if (kind == GroupKind::gl2) return "gl2";
    return "det" + std::to_string(det_order);
}

void atomic_write(const std::string& path, const std::string& payload) {
    fs::create_directories(fs::path(path).parent_path());
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp);
        out << payload;
    }
    fs::rename(tmp, path);
}

bool read_json(const std::string& path, json* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    try {
        in >> *out;
    } catch (const json::exception&) {
        std::cerr << "warning: corrupt cache file " << path << ", recomputing\n";
        return false;
    }
    return true;
}

}  // namespace

std::string group_cache_path(const CacheConfig& cfg, const FieldTower& t,
                             GroupKind kind, int det_order) {
    std::ostringstream os;
    os << cfg.dir << "/group_" << kind_tag(kind, det_order) << "_q" << t.q() << "_v"
       << kCacheFormatVersion << ".json";
    return os.str();
}

std::string green_cache_path(const CacheConfig& cfg, const GroupModel& g) {
    std::ostringstream os;
    os << cfg.dir << "/green_" << kind_tag(g.kind(), g.det_order()) << "_q"
       << g.tower().q() << "_v" << kCacheFormatVersion << ".json";
    return os.str();
}

GroupModel build_group_cached(const FieldTower& t, GroupKind kind, int det_order,
                              const CacheConfig& cfg) {
    if (!cfg.enabled()) return build_group(t, kind, det_order);
    GroupModel g = build_group(t, kind, det_order, /*defer_classes=*/true);

    const std::string path = group_cache_path(cfg, t, kind, g.det_order());
    json j;
    if (read_json(path, &j)) {
        try {
            if (j.at("format_version").get<int>() != kCacheFormatVersion)
                throw Error("stale cache version");
            if (j.at("q").get<int>() != t.q() ||
                j.at("det_order").get<int>() != g.det_order() ||
                j.at("order").get<long>() != g.order())
                throw Error("cache key mismatch");
            std::vector<ConjClass> classes;
            for (const auto& e : j.at("classes"))
                classes.push_back({e.at(0).get<int>(), e.at(1).get<long>()});
            auto elem_class = j.at("elem_class").get<std::vector<int>>();
            g.adopt_classes(std::move(classes), std::move(elem_class));
            return g;
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring cache file " << path << " (" << e.what()
                      << "), recomputing\n";
        }
    }

    g.ensure_classes();
    json out;
    out["format_version"] = kCacheFormatVersion;
    out["kind"] = kind_tag(kind, g.det_order());
    out["q"] = t.q();
    out["det_order"] = g.det_order();
    out["order"] = g.order();
    json classes = json::array();
    for (const ConjClass& c : g.classes()) classes.push_back(json::array({c.rep, c.size}));
    out["classes"] = classes;
    out["elem_class"] = g.elem_class_raw();
    atomic_write(path, out.dump() + "\n");
    return g;
}

GreenTable green_table_cached(const GroupModel& g, const CacheConfig& cfg) {
    if (!cfg.enabled()) return GreenTable::build(g);
    const std::string path = green_cache_path(cfg, g);

    const auto serialize = [](const GreenTable& table) {
        json entries = json::array();
        for (const auto& [key, value] : table.entries()) {
            json e;
            e["cent"] = key.cent == CentralizerClass::full_group ? "full" : "torus";
            e["torus"] = key.torus == TorusKind::split ? "split" : "nonsplit";
            e["unip_class"] = key.unip_class;
            e["value"] = value;
            entries.push_back(e);
        }
        return entries;
    };

    json j;
    if (read_json(path, &j)) {
        try {
            if (j.at("format_version").get<int>() != kCacheFormatVersion)
                throw Error("stale cache version");
            if (j.at("q").get<int>() != g.tower().q() ||
                j.at("det_order").get<int>() != g.det_order() ||
                !j.at("validated").get<bool>())
                throw Error("cache key mismatch");
            // A cached table must agree with the closed forms; the expensive
            // orthogonality validation already ran when it was stored.
            GreenTable table = GreenTable::build_unvalidated(g);
            if (j.at("entries") != serialize(table)) throw Error("cache value mismatch");
            return table;
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring cache file " << path << " (" << e.what()
                      << "), recomputing\n";
        }
    }

    GreenTable table = GreenTable::build(g);
    json out;
    out["format_version"] = kCacheFormatVersion;
    out["kind"] = kind_tag(g.kind(), g.det_order());
    out["q"] = g.tower().q();
    out["det_order"] = g.det_order();
    out["validated"] = true;
    out["entries"] = serialize(table);
    atomic_write(path, out.dump() + "\n");
    return table;
}

}  // namespace dl2
