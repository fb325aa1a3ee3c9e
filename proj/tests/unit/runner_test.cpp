#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dl2/runner.hpp"
#include "test_util.hpp"

using namespace dl2;
using dl2::test::bench;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Small structural validator for the draft-07 subset our schemas use:
// type, required, properties, items, enum, $ref into #/definitions.
bool validate_schema(const json& schema, const json& root, const json& value,
                     std::string* why) {
    if (schema.contains("$ref")) {
        const std::string ref = schema["$ref"].get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) {
            *why = "unsupported $ref " + ref;
            return false;
        }
        return validate_schema(root["definitions"][ref.substr(prefix.size())], root,
                               value, why);
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok =
            (type == "object" && value.is_object()) ||
            (type == "array" && value.is_array()) ||
            (type == "string" && value.is_string()) ||
            (type == "integer" && value.is_number_integer()) ||
            (type == "number" && value.is_number()) ||
            (type == "boolean" && value.is_boolean());
        if (!ok) {
            *why = "expected " + type + ", got " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& candidate : schema["enum"]) hit = hit || candidate == value;
        if (!hit) {
            *why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) {
                *why = "missing required key " + key.get<std::string>();
                return false;
            }
    if (schema.contains("properties"))
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) &&
                !validate_schema(sub, root, value.at(key), why))
                return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validate_schema(schema["items"], root, item, why)) return false;
    return true;
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(DL2_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

std::pair<int, std::string> run_cli(const RunConfig& config) {
    std::ostringstream out, err;
    const int code = run(config, out, err);
    return {code, out.str()};
}

fs::path fresh_cache_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("dl2_test_cache_" + tag);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_SUITE("runner") {

TEST_CASE("parse_q accepts odd prime powers within budget") {
    CHECK(parse_q(3) == std::pair{3, 1});
    CHECK(parse_q(9) == std::pair{3, 2});
    CHECK(parse_q(11) == std::pair{11, 1});
    CHECK_THROWS_WITH_AS(parse_q(2), doctest::Contains("Weyl"), Error);
    CHECK_THROWS_AS(parse_q(4), Error);
    CHECK_THROWS_AS(parse_q(15), Error);
    CHECK_THROWS_AS(parse_q(13), Error);
}

TEST_CASE("verify: passes, validates against the shipped schema") {
    RunConfig config;
    config.command = "verify";
    config.q_list = {3};
    config.suite = "degrees";
    config.format = OutputFormat::json;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);
    const json report = json::parse(text);
    CHECK(report["all_passed"] == true);
    std::string why;
    CHECK_MESSAGE(validate_schema(load_schema("verify_report.schema.json"),
                                  load_schema("verify_report.schema.json"), report, &why),
                  why);
}

TEST_CASE("verify: identical runs and jobs produce identical bytes") {
    RunConfig config;
    config.command = "verify";
    config.q_list = {3};
    config.suite = "all";
    config.iso_samples = 5;
    const auto [c1, t1] = run_cli(config);
    const auto [c2, t2] = run_cli(config);
    CHECK(c1 == 0);
    CHECK(t1 == t2);
    config.jobs = 2;
    const auto [c3, t3] = run_cli(config);
    CHECK(c3 == 0);
    CHECK(t1 == t3);
}

TEST_CASE("restrict: report validates against the shipped schema") {
    RunConfig config;
    config.command = "restrict";
    config.q_list = {5};
    config.torus = TorusKind::nonsplit;
    config.theta_j1 = 3;
    config.format = OutputFormat::json;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);
    const json report = json::parse(text);
    CHECK(report["t"] == 2);
    CHECK(report["m"] == 1);
    std::string why;
    CHECK_MESSAGE(validate_schema(load_schema("restriction_report.schema.json"),
                                  load_schema("restriction_report.schema.json"), report, &why),
                  why);
}

TEST_CASE("table: q=5 nonsplit theta=1 csv has 24 rows, identity row -4") {
    RunConfig config;
    config.command = "table";
    config.q_list = {5};
    config.torus = TorusKind::nonsplit;
    config.theta_j1 = 1;
    config.format = OutputFormat::csv;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "class,representative,size,re,im");
    std::getline(lines, line);
    CHECK(line == "0,[[1,0],[0,1]],1,-4,0");
    int rows = 1;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 24);  // q^2 - 1 classes
}

TEST_CASE("usage errors exit with code 2") {
    std::ostringstream out, err;
    RunConfig config;
    config.command = "verify";
    config.q_list = {2};
    CHECK(run(config, out, err) == 2);
    CHECK(err.str().find("Weyl") != std::string::npos);

    RunConfig bad_cmd;
    bad_cmd.command = "frobnicate";
    bad_cmd.q_list = {3};
    std::ostringstream out2, err2;
    CHECK(run(bad_cmd, out2, err2) == 2);

    RunConfig multi_table;
    multi_table.command = "table";
    multi_table.q_list = {3, 5};
    std::ostringstream out3, err3;
    CHECK(run(multi_table, out3, err3) == 2);
}

TEST_CASE("restrict with a non-regular theta is a usage error") {
    for (TorusKind k : {TorusKind::nonsplit, TorusKind::split}) {
        RunConfig config;
        config.command = "restrict";
        config.q_list = {5};
        config.torus = k;
        config.theta_j1 = k == TorusKind::nonsplit ? 6 : 2;  // fixed by the Weyl action
        config.theta_j2 = 2;
        std::ostringstream out, err;
        CHECK(run(config, out, err) == 2);
    }

    RunConfig bad_suite;
    bad_suite.command = "verify";
    bad_suite.q_list = {3};
    bad_suite.suite = "frobnicate";
    std::ostringstream out, err;
    CHECK(run(bad_suite, out, err) == 2);
}

TEST_CASE("cache: classes output is byte-identical across cache states") {
    const fs::path dir = fresh_cache_dir("classes");
    RunConfig config;
    config.command = "classes";
    config.q_list = {7};
    config.format = OutputFormat::csv;
    config.cache_dir = dir.string();

    const auto [c1, cold] = run_cli(config);
    CHECK(c1 == 0);
    CHECK(fs::exists(dir));
    const auto [c2, warm] = run_cli(config);
    CHECK(c2 == 0);
    CHECK(cold == warm);
    fs::remove_all(dir);
}

TEST_CASE("cache: adopted partition matches a fresh computation") {
    const fs::path dir = fresh_cache_dir("adopt");
    const CacheConfig cache{dir.string()};
    const FieldTower& tower = bench(7).tower;

    const GroupModel computed = build_group_cached(tower, GroupKind::gl2, 0, cache);
    const GroupModel loaded = build_group_cached(tower, GroupKind::gl2, 0, cache);
    REQUIRE(loaded.classes().size() == computed.classes().size());
    for (size_t c = 0; c < computed.classes().size(); ++c) {
        CHECK(loaded.classes()[c].rep == computed.classes()[c].rep);
        CHECK(loaded.classes()[c].size == computed.classes()[c].size);
    }
    CHECK(loaded.elem_class_raw() == computed.elem_class_raw());
    fs::remove_all(dir);
}

TEST_CASE("cache: corrupt and stale files are recomputed and overwritten") {
    const fs::path dir = fresh_cache_dir("corrupt");
    const CacheConfig cache{dir.string()};
    const FieldTower& tower = bench(5).tower;

    const GroupModel fresh = build_group_cached(tower, GroupKind::gl2, 0, cache);
    const std::string path = group_cache_path(cache, tower, GroupKind::gl2, 4);

    {
        std::ofstream f(path, std::ios::trunc);
        f << "garbage{";
    }
    const GroupModel recovered = build_group_cached(tower, GroupKind::gl2, 0, cache);
    CHECK(recovered.elem_class_raw() == fresh.elem_class_raw());

    // A version bump (different format_version in the payload) is ignored.
    {
        json j = json::parse(std::ifstream(path));
        j["format_version"] = kCacheFormatVersion + 1;
        std::ofstream f(path, std::ios::trunc);
        f << j.dump();
    }
    const GroupModel rebuilt = build_group_cached(tower, GroupKind::gl2, 0, cache);
    CHECK(rebuilt.elem_class_raw() == fresh.elem_class_raw());
    CHECK(json::parse(std::ifstream(path))["format_version"] == kCacheFormatVersion);

    // Deleting the directory triggers a transparent recompute.
    fs::remove_all(dir);
    const GroupModel again = build_group_cached(tower, GroupKind::gl2, 0, cache);
    CHECK(again.elem_class_raw() == fresh.elem_class_raw());
    fs::remove_all(dir);
}

TEST_CASE("green tables round-trip through the cache") {
    const fs::path dir = fresh_cache_dir("green");
    const CacheConfig cache{dir.string()};
    const GroupModel& g = bench(5).gl2_model;
    const GreenTable stored = green_table_cached(g, cache);
    const GreenTable loaded = green_table_cached(g, cache);
    CHECK(stored.entries() == loaded.entries());
    fs::remove_all(dir);
}

TEST_CASE("restrict: split torus path reports a principal series") {
    RunConfig config;
    config.command = "restrict";
    config.q_list = {5};
    config.torus = TorusKind::split;
    config.theta_j1 = 1;
    config.theta_j2 = 0;
    config.format = OutputFormat::json;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);
    const json report = json::parse(text);
    CHECK(report["dim_chi"] == 6);  // q+1
    CHECK(report["m"] == 1);
    CHECK(report["theorem_deviation"].get<double>() < 1e-6);
    CHECK(report["prediction_matched"] == true);
    std::string why;
    CHECK_MESSAGE(validate_schema(load_schema("restriction_report.schema.json"),
                                  load_schema("restriction_report.schema.json"), report, &why),
                  why);
}

TEST_CASE("output lands in --out files byte-identically to stdout") {
    const fs::path path = fs::temp_directory_path() / "dl2_test_out.json";
    RunConfig config;
    config.command = "verify";
    config.q_list = {3};
    config.suite = "coset";
    config.format = OutputFormat::json;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);

    config.out_path = path.string();
    std::ostringstream out, err;
    CHECK(run(config, out, err) == 0);
    CHECK(out.str().empty());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream file;
    file << in.rdbuf();
    CHECK(file.str() == text);
    fs::remove(path);
}

TEST_CASE("census command: json payload is well-formed and passing") {
    RunConfig config;
    config.command = "census";
    config.q_list = {3};
    config.format = OutputFormat::json;
    const auto [code, text] = run_cli(config);
    CHECK(code == 0);
    const json j = json::parse(text);
    CHECK(j["items"].size() == 1);
    CHECK(j["items"][0]["orbit_count"] == 3);  // q(q-1)/2 Frobenius orbits
    CHECK(j["items"][0]["matches_index_census"] == true);
    std::string why;
    CHECK_MESSAGE(validate_schema(load_schema("census_report.schema.json"),
                                  load_schema("census_report.schema.json"), j, &why),
                  why);
}

}  // TEST_SUITE
