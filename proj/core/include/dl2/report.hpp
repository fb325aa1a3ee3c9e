#pragma once

#include <string>

#include "dl2/restlab.hpp"

namespace dl2 {

enum class OutputFormat { md, csv, json };

OutputFormat parse_format(const std::string& name);

/// Conjugacy class listing: representative, size, element order,
/// semisimple/unipotent flags.
std::string render_classes(const GroupModel& g, OutputFormat format);

/// Class-function table for one character: class index, representative,
/// size, real and imaginary part.
std::string render_character_table(const ClassFunction& f, const std::string& label,
                                   OutputFormat format);

std::string render_restriction_report(const RestrictionReport& rep, OutputFormat format);
std::string render_census(const CensusSummary& cs, OutputFormat format);

/// JSON bodies (also used by the md/csv renderers and the verify summary).
std::string restriction_report_json(const RestrictionReport& rep);
std::string census_json(const CensusSummary& cs);
std::string census_collection_json(const std::vector<CensusSummary>& summaries);

struct VerifySummary {
    std::vector<int> q_list;
    std::string suite;
    std::vector<SweepResult> results;  // tagged with q via name prefix
    std::vector<std::string> failure_manifest;
    bool all_passed = true;
};
std::string verify_summary_json(const VerifySummary& summary);
std::string render_verify_summary(const VerifySummary& summary, OutputFormat format);

std::string mat_to_string(const FieldTower& t, int code);

}  // namespace dl2
