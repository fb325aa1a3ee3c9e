#include "dl2/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace dl2 {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "md") return OutputFormat::md;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw Error("unknown output format: " + name);
}

std::string mat_to_string(const FieldTower& t, int code) {
    const Mat2 m = decode_mat(t, code);
    std::ostringstream os;
    os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    return os.str();
}

namespace {

constexpr int kSchemaVersion = 1;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_value(double x) {
    if (x == 0.0) x = 0.0;  // fold negative zero
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct TableLayout {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_table(const TableLayout& table, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        for (size_t i = 0; i < table.header.size(); ++i)
            os << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
        for (const auto& row : table.rows)
            for (size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "\n");
        return os.str();
    }
    // GitHub-flavored markdown
    const auto line = [&](const std::vector<std::string>& cells) {
        os << "|";
        for (const auto& c : cells) os << " " << c << " |";
        os << "\n";
    };
    line(table.header);
    std::vector<std::string> rule(table.header.size(), "---");
    line(rule);
    for (const auto& row : table.rows) line(row);
    return os.str();
}

std::string torus_str(TorusKind k) {
    return k == TorusKind::split ? "split" : "nonsplit";
}

json report_body(const RestrictionReport& rep) {
    json j;
    j["q"] = rep.q;
    j["torus"] = torus_str(rep.torus);
    j["theta"] = rep.torus == TorusKind::split
                     ? json::array({rep.theta_j1, rep.theta_j2})
                     : json::array({rep.theta_j1});
    j["theta_h_index"] = rep.theta_h_index;
    j["subgroup_det_order"] = rep.subgroup_det_order;
    j["theorem_deviation"] = rep.theorem_deviation;
    j["restriction_norm"] = rep.restriction_norm;
    j["m"] = rep.multiplicity;
    j["t"] = rep.component_count;
    j["s"] = rep.twist_stabilizer;
    j["inertia_index"] = rep.inertia_index;
    j["dim_chi"] = rep.dim_chi;
    j["dim_components"] = rep.dim_components;
    j["theta_regular"] = rep.theta_regular;
    j["theta_h_regular"] = rep.theta_h_regular;
    j["theta_h_regular_in_g"] = rep.theta_h_regular_in_g;
    j["clifford_consistent"] = rep.clifford_consistent;
    j["prediction_matched"] = rep.prediction_matched;
    j["unique_solution"] = rep.unique_solution;
    json cands = json::array();
    for (const auto& [m, t] : rep.candidates) cands.push_back(json::array({m, t}));
    j["candidates"] = cands;
    return j;
}

json census_body(const CensusSummary& cs) {
    json j;
    j["q"] = cs.q;
    j["orbit_count"] = cs.orbit_count;
    j["single_component"] = cs.single_component;
    j["split_component"] = cs.split_component;
    j["all_multiplicity_free"] = cs.all_multiplicity_free;
    j["all_predictions_matched"] = cs.all_predictions_matched;
    j["expected_orbits"] = cs.expected_orbits;
    j["expected_split"] = cs.expected_split;
    j["matches_index_census"] = cs.matches_index_census;
    j["max_theorem_deviation"] = cs.max_theorem_deviation;
    json reports = json::array();
    for (const auto& rep : cs.reports) reports.push_back(report_body(rep));
    j["reports"] = reports;
    return j;
}

}  // namespace

std::string render_classes(const GroupModel& g, OutputFormat format) {
    if (format == OutputFormat::json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "classes";
        j["q"] = g.tower().q();
        j["group"] = g.kind() == GroupKind::gl2 ? "gl2" : "det_subgroup";
        j["det_order"] = g.det_order();
        j["order"] = g.order();
        json classes = json::array();
        for (const ConjClass& c : g.classes()) {
            const Mat2 rep = decode_mat(g.tower(), c.rep);
            json e;
            e["representative"] = mat_to_string(g.tower(), c.rep);
            e["size"] = c.size;
            e["element_order"] = element_order(g, rep);
            e["semisimple"] = is_semisimple(g, rep);
            e["unipotent"] = is_unipotent(g, rep);
            classes.push_back(e);
        }
        j["classes"] = classes;
        return dump(j);
    }
    TableLayout table;
    table.header = {"class", "representative", "size", "order", "semisimple", "unipotent"};
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const ConjClass& cls = g.classes()[c];
        const Mat2 rep = decode_mat(g.tower(), cls.rep);
        table.rows.push_back({std::to_string(c), mat_to_string(g.tower(), cls.rep),
                             std::to_string(cls.size),
                             std::to_string(element_order(g, rep)),
                             is_semisimple(g, rep) ? "yes" : "no",
                             is_unipotent(g, rep) ? "yes" : "no"});
    }
    return render_table(table, format);
}

std::string render_character_table(const ClassFunction& f, const std::string& label,
                                   OutputFormat format) {
    const GroupModel& g = f.owner();
    if (format == OutputFormat::json) {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "table";
        j["label"] = label;
        j["q"] = g.tower().q();
        json rows = json::array();
        for (size_t c = 0; c < g.classes().size(); ++c) {
            json e;
            e["class"] = c;
            e["representative"] = mat_to_string(g.tower(), g.classes()[c].rep);
            e["size"] = g.classes()[c].size;
            e["re"] = f.at_class(static_cast<int>(c)).real();
            e["im"] = f.at_class(static_cast<int>(c)).imag();
            rows.push_back(e);
        }
        j["values"] = rows;
        return dump(j);
    }
    TableLayout table;
    table.header = {"class", "representative", "size", "re", "im"};
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const cd v = f.at_class(static_cast<int>(c));
        table.rows.push_back({std::to_string(c),
                             mat_to_string(g.tower(), g.classes()[c].rep),
                             std::to_string(g.classes()[c].size),
                             format_value(v.real()), format_value(v.imag())});
    }
    return render_table(table, format);
}

std::string restriction_report_json(const RestrictionReport& rep) {
    json j = report_body(rep);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "restrict";
    return dump(j);
}

std::string render_restriction_report(const RestrictionReport& rep, OutputFormat format) {
    if (format == OutputFormat::json) return restriction_report_json(rep);
    TableLayout table;
    table.header = {"field", "value"};
    const json j = report_body(rep);
    for (const auto& [key, value] : j.items())
        table.rows.push_back({key, value.dump()});
    return render_table(table, format);
}

std::string census_json(const CensusSummary& cs) {
    json j = census_body(cs);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "census";
    return dump(j);
}

std::string census_collection_json(const std::vector<CensusSummary>& summaries) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "census";
    json items = json::array();
    for (const CensusSummary& cs : summaries) items.push_back(census_body(cs));
    j["items"] = items;
    return dump(j);
}

std::string render_census(const CensusSummary& cs, OutputFormat format) {
    if (format == OutputFormat::json) return census_json(cs);
    TableLayout table;
    table.header = {"j", "theta_h", "m", "t", "s", "dim_component",
                   "theta_h_regular_in_g", "deviation", "prediction"};
    for (const auto& rep : cs.reports)
        table.rows.push_back({std::to_string(rep.theta_j1),
                             std::to_string(rep.theta_h_index),
                             std::to_string(rep.multiplicity),
                             std::to_string(rep.component_count),
                             std::to_string(rep.twist_stabilizer),
                             std::to_string(rep.dim_components),
                             rep.theta_h_regular_in_g ? "yes" : "no",
                             format_value(rep.theorem_deviation),
                             rep.prediction_matched ? "matched" : "MISMATCH"});
    std::ostringstream os;
    os << render_table(table, format);
    os << (format == OutputFormat::csv ? "" : "\n")
       << "orbits: " << cs.orbit_count << " (expected " << cs.expected_orbits
       << "), t=1: " << cs.single_component << ", t=2: " << cs.split_component
       << " (expected " << cs.expected_split << ")\n";
    return os.str();
}

std::string render_verify_summary(const VerifySummary& summary, OutputFormat format) {
    if (format == OutputFormat::json) return verify_summary_json(summary);
    TableLayout table;
    table.header = {"q", "suite", "checks", "max_deviation", "passed"};
    for (const SweepResult& r : summary.results)
        table.rows.push_back({std::to_string(r.q), r.name, std::to_string(r.checks),
                              format_value(r.max_deviation),
                              r.passed() ? "yes" : "NO"});
    std::ostringstream os;
    os << render_table(table, format);
    for (const std::string& f : summary.failure_manifest)
        os << "failure: " << f << "\n";
    os << (summary.all_passed ? "all suites passed\n" : "FAILURES PRESENT\n");
    return os.str();
}

std::string verify_summary_json(const VerifySummary& summary) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "verify";
    j["q"] = summary.q_list;
    j["suite"] = summary.suite;
    json results = json::array();
    for (const SweepResult& r : summary.results) {
        json e;
        e["name"] = r.name;
        e["q"] = r.q;
        e["checks"] = r.checks;
        e["max_deviation"] = r.max_deviation;
        e["passed"] = r.passed();
        e["failures"] = r.failures;
        results.push_back(e);
    }
    j["results"] = results;
    j["failure_manifest"] = summary.failure_manifest;
    j["all_passed"] = summary.all_passed;
    return dump(j);
}

}  // namespace dl2
