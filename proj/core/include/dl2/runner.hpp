#pragma once

#include <iosfwd>
#include <memory>

#include "dl2/cache.hpp"
#include "dl2/report.hpp"

namespace dl2 {

/// One fully built bench for a given q: tower, both group models, lab.
/// Non-movable; members hold pointers into each other.
struct Workspace {
    explicit Workspace(int q, const CacheConfig& cache = {});
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

    FieldTower tower;
    GroupModel gl2_model;
    GroupModel sl2_model;
    Lab lab;
};

/// Splits q into (p, e); rejects even q (p | |W|), non-prime-powers and
/// anything over the enumeration budget.
std::pair<int, int> parse_q(int q);

struct RunConfig {
    std::string command;  // table | restrict | verify | classes | census
    std::vector<int> q_list;
    TorusKind torus = TorusKind::nonsplit;
    long theta_j1 = 0;
    long theta_j2 = 0;
    std::string group = "gl2";  // gl2 | sl2 | det:<order>
    OutputFormat format = OutputFormat::md;
    std::string cache_dir;
    std::string suite = "all";
    int jobs = 1;
    std::string out_path;  // empty = stdout
    int iso_samples = 20;
    unsigned iso_seed = 20260808;
};

/// Executes one command. Returns 0 on success / all checks passing, 1 on a
/// verification failure (a JSON failure manifest naming the witnesses goes to
/// the output stream), 2 on a usage error (message on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The verify pipeline as a reusable piece: runs the named suites over the
/// given workspaces. Suite names: restriction, oracle, orthogonality,
/// degrees, coset, iso, census, regularity, all.
VerifySummary run_verify(const std::vector<const Workspace*>& benches,
                         const std::string& suite, int jobs, int iso_samples,
                         unsigned iso_seed);

}  // namespace dl2
