#include "dl2/runner.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "parallel.hpp"

namespace dl2 {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

const std::vector<std::string> kAllSuites = {
    "restriction", "oracle",      "orthogonality", "degrees",
    "coset",       "iso",         "census",        "regularity"};

SweepResult run_suite(const Lab& lab, const std::string& name, int jobs,
                      int iso_samples, unsigned iso_seed) {
    if (name == "restriction") return lab.restriction_suite(jobs);
    if (name == "oracle") return lab.oracle_suite();
    if (name == "orthogonality") return lab.orthogonality_suite();
    if (name == "degrees") return lab.degree_suite();
    if (name == "coset") return lab.coset_identity_suite();
    if (name == "iso") return lab.iso_suite(iso_samples, iso_seed + lab.q());
    if (name == "census") return lab.census_suite(jobs);
    if (name == "regularity") return lab.regularity_suite(jobs);
    throw UsageError("unknown suite: " + name);
}

}  // namespace

std::pair<int, int> parse_q(int q) {
    if (q % 2 == 0)
        throw UsageError("q = " + std::to_string(q) +
                         " rejected: p = 2 divides the Weyl group order |W| = 2");
    if (q < 3) throw UsageError("q must be an odd prime power >= 3");
    int p = 0;
    for (int d = 3; d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    int rest = q;
    while (rest > 1 && rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    if (q > 11)
        throw UsageError("q = " + std::to_string(q) +
                         " exceeds the enumeration budget (q <= 11)");
    return {p, e};
}

Workspace::Workspace(int q, const CacheConfig& cache)
    : tower(parse_q(q).first, parse_q(q).second),
      gl2_model(build_group_cached(tower, GroupKind::gl2, 0, cache)),
      sl2_model(build_group_cached(tower, GroupKind::det_subgroup, 1, cache)),
      lab(gl2_model, sl2_model) {}

VerifySummary run_verify(const std::vector<const Workspace*>& benches,
                         const std::string& suite, int jobs, int iso_samples,
                         unsigned iso_seed) {
    std::vector<std::string> suites;
    if (suite == "all")
        suites = kAllSuites;
    else
        suites.push_back(suite);

    struct Task {
        const Workspace* bench;
        std::string suite;
    };
    std::vector<Task> tasks;
    for (const Workspace* bench : benches)
        for (const std::string& s : suites) tasks.push_back({bench, s});

    VerifySummary summary;
    summary.suite = suite;
    for (const Workspace* bench : benches)
        summary.q_list.push_back(bench->lab.q());
    summary.results.resize(tasks.size());

    // One worker pool layer: when there is a single (q, suite) task the
    // inner per-theta pool gets the budget instead.
    const int inner_jobs = tasks.size() > 1 ? 1 : jobs;
    detail::parallel_for(tasks.size(), jobs, [&](size_t i) {
        summary.results[i] = run_suite(tasks[i].bench->lab, tasks[i].suite,
                                       inner_jobs, iso_samples, iso_seed);
    });

    for (const SweepResult& r : summary.results) {
        if (!r.passed()) summary.all_passed = false;
        for (const std::string& f : r.failures)
            summary.failure_manifest.push_back(r.name + ": " + f);
    }
    return summary;
}

namespace {

GroupModel build_selected_group(const FieldTower& tower, const std::string& selector,
                                const CacheConfig& cache) {
    if (selector == "gl2") return build_group_cached(tower, GroupKind::gl2, 0, cache);
    if (selector == "sl2")
        return build_group_cached(tower, GroupKind::det_subgroup, 1, cache);
    if (selector.rfind("det:", 0) == 0) {
        int order = 0;
        try {
            order = std::stoi(selector.substr(4));
        } catch (const std::exception&) {
            throw UsageError("bad determinant subgroup order in " + selector);
        }
        return build_group_cached(tower, GroupKind::det_subgroup, order, cache);
    }
    throw UsageError("unknown group selector: " + selector +
                     " (expected gl2, sl2 or det:<order>)");
}

void emit(const RunConfig& config, std::ostream& out, const std::string& payload) {
    if (config.out_path.empty() || config.out_path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open output file " + config.out_path);
    file << payload;
}

int run_checked(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.q_list.empty()) throw UsageError("at least one q is required");
    for (int q : config.q_list) parse_q(q);
    if (config.jobs < 1) throw UsageError("jobs must be >= 1");
    const CacheConfig cache{config.cache_dir};

    const bool single_q = config.q_list.size() == 1;
    if ((config.command == "table" || config.command == "classes" ||
         config.command == "restrict") &&
        !single_q)
        throw UsageError(config.command + " expects exactly one q");

    if (config.command == "classes") {
        const auto [p, e] = parse_q(config.q_list[0]);
        const FieldTower tower(p, e);
        const GroupModel g = build_selected_group(tower, config.group, cache);
        emit(config, out, render_classes(g, config.format));
        return 0;
    }

    if (config.command == "table") {
        if (config.group != "gl2" && config.group != "sl2")
            throw UsageError("table expects --group gl2 or sl2");
        Workspace bench(config.q_list[0], cache);
        const bool sub = config.group == "sl2";
        const Lab& lab = bench.lab;
        const TorusDatum& torus =
            sub ? lab.subtorus(config.torus) : lab.torus(config.torus);
        const TorusCharacter theta =
            make_character(torus, config.theta_j1, config.theta_j2);
        const DlEvaluator& ev =
            sub ? lab.sub_evaluator(config.torus) : lab.evaluator(config.torus);
        std::ostringstream label;
        label << "R[q=" << lab.q() << ","
              << (config.torus == TorusKind::split ? "split" : "nonsplit")
              << ",group=" << config.group << ",theta=" << config.theta_j1;
        if (config.torus == TorusKind::split && !sub) label << "," << config.theta_j2;
        label << "]";
        emit(config, out,
             render_character_table(ev.character(theta), label.str(), config.format));
        return 0;
    }

    if (config.command == "restrict") {
        Workspace bench(config.q_list[0], cache);
        const Lab& lab = bench.lab;
        if (!is_regular(lab.character(config.torus, config.theta_j1, config.theta_j2)))
            throw UsageError("restrict needs a regular theta (irreducible character)");
        RestrictionReport rep;
        if (config.torus == TorusKind::nonsplit) {
            rep = lab.analyze_cuspidal(config.theta_j1);
        } else {
            const TorusCharacter theta =
                lab.character(TorusKind::split, config.theta_j1, config.theta_j2);
            rep = lab.clifford_analyze(
                lab.evaluator(TorusKind::split).character(theta), lab.sl2());
            rep.torus = TorusKind::split;
            rep.theta_j1 = theta.j1;
            rep.theta_j2 = theta.j2;
            rep.theorem_deviation = lab.restriction_deviation(TorusKind::split, theta);
            const auto [sub, theta_h] = lab.restrict_datum(TorusKind::split, theta);
            rep.theta_h_index = theta_h.j1;
            rep.theta_regular = true;
            rep.theta_h_regular = is_regular(theta_h);
            rep.theta_h_regular_in_g =
                is_regular_in_ambient(theta_h, lab.torus(TorusKind::split), lab.gl2());
            rep.prediction_matched =
                rep.unique_solution && rep.multiplicity == 1 &&
                rep.component_count == (rep.theta_h_regular_in_g ? 1 : 2);
        }
        emit(config, out, render_restriction_report(rep, config.format));
        return 0;
    }

    if (config.command == "census") {
        std::vector<std::unique_ptr<Workspace>> benches;
        std::vector<CensusSummary> summaries;
        for (int q : config.q_list) {
            benches.push_back(std::make_unique<Workspace>(q, cache));
            summaries.push_back(benches.back()->lab.census(config.jobs));
        }
        std::ostringstream os;
        if (config.format == OutputFormat::json) {
            os << census_collection_json(summaries);
        } else {
            for (const CensusSummary& cs : summaries)
                os << render_census(cs, config.format) << "\n";
        }
        emit(config, out, os.str());
        for (const CensusSummary& cs : summaries)
            if (!cs.matches_index_census || !cs.all_predictions_matched ||
                !cs.all_multiplicity_free) {
                err << "census verification failed at q=" << cs.q << "\n";
                return 1;
            }
        return 0;
    }

    if (config.command == "verify") {
        if (config.suite != "all" &&
            std::find(kAllSuites.begin(), kAllSuites.end(), config.suite) ==
                kAllSuites.end())
            throw UsageError("unknown suite: " + config.suite);
        std::vector<std::unique_ptr<Workspace>> owned;
        std::vector<const Workspace*> benches;
        for (int q : config.q_list) {
            owned.push_back(std::make_unique<Workspace>(q, cache));
            benches.push_back(owned.back().get());
        }
        const VerifySummary summary = run_verify(benches, config.suite, config.jobs,
                                                 config.iso_samples, config.iso_seed);
        emit(config, out, render_verify_summary(summary, config.format));
        return summary.all_passed ? 0 : 1;
    }

    throw UsageError("unknown command: " + config.command);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(config, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dl2
