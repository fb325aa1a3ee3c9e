#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dl2/dlchar.hpp"

namespace dl2 {

/// Everything measured about one restriction: the theorem deviation, the
/// Clifford invariants n = <Res chi, Res chi>, the twist stabilizer size s,
/// the multiplicity/component solution (m, t) of m^2 t = n, the inertia index
/// [G:I] = t, dimension bookkeeping, and the regularity flags that drive the
/// multiplicity-free prediction.
struct RestrictionReport {
    int q = 0;
    TorusKind torus = TorusKind::nonsplit;
    long theta_j1 = 0, theta_j2 = 0;
    long theta_h_index = 0;
    int subgroup_det_order = 1;

    double theorem_deviation = 0.0;

    long restriction_norm = 0;  // n
    long multiplicity = 0;      // m
    long component_count = 0;   // t
    long twist_stabilizer = 0;  // s
    long inertia_index = 0;     // [G:I]
    long dim_chi = 0;
    long dim_components = 0;    // dim of one component

    bool theta_regular = false;
    bool theta_h_regular = false;
    bool theta_h_regular_in_g = false;
    bool clifford_consistent = false;  // n == s and m^2 t == n
    bool prediction_matched = false;
    bool unique_solution = false;
    std::vector<std::pair<long, long>> candidates;  // all (m, t) solutions
};

struct CensusSummary {
    int q = 0;
    long orbit_count = 0;
    long single_component = 0;  // t = 1
    long split_component = 0;   // t = 2
    bool all_multiplicity_free = false;
    bool all_predictions_matched = false;
    long expected_orbits = 0;  // independent index census: q(q-1)/2
    long expected_split = 0;   // orbits with 2j = 0 mod q+1
    bool matches_index_census = false;
    double max_theorem_deviation = 0.0;
    std::vector<RestrictionReport> reports;
};

struct SweepResult {
    std::string name;
    int q = 0;
    long checks = 0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Verification bench for one q: owns the GL2/SL2 tori, Green tables and
/// evaluators, and exposes the theorem checks, the Clifford analyzer and the
/// census. The group models must outlive the lab.
class Lab {
public:
    Lab(const GroupModel& gl2, const GroupModel& sl2);
    // Evaluators point into the lab's own tori.
    Lab(const Lab&) = delete;
    Lab& operator=(const Lab&) = delete;

    int q() const { return gl2_->tower().q(); }
    const GroupModel& gl2() const { return *gl2_; }
    const GroupModel& sl2() const { return *sl2_; }
    const TorusDatum& torus(TorusKind k) const;
    const TorusDatum& subtorus(TorusKind k) const;
    const DlEvaluator& evaluator(TorusKind k) const;
    const DlEvaluator& sub_evaluator(TorusKind k) const;

    TorusCharacter character(TorusKind k, long j1, long j2 = 0) const;

    /// Datum restriction (T, theta) -> (T_H, theta_H).
    std::pair<const TorusDatum*, TorusCharacter> restrict_datum(
        TorusKind k, const TorusCharacter& theta) const;

    /// max |R^{GL2}_{T,theta}(h) - R^{SL2}_{T_H,theta_H}(h)| over SL2 classes.
    double restriction_deviation(TorusKind k, const TorusCharacter& theta) const;

    /// Deviation between R_{T,theta} and the transported R_{gTg^-1, theta o Ad g^-1}.
    double iso_invariance_deviation(TorusKind k, const TorusCharacter& theta,
                                    const Mat2& g) const;

    /// Clifford invariants of an irreducible character of GL2 against a
    /// determinant subgroup. Rejects chi with <chi,chi> != 1.
    RestrictionReport clifford_analyze(const ClassFunction& chi,
                                       const GroupModel& h) const;

    /// Full cuspidal pipeline for a regular nonsplit index j: theorem
    /// deviation, Clifford analysis against SL2, regularity prediction.
    RestrictionReport analyze_cuspidal(long j) const;

    /// All cuspidal Frobenius orbits (j ~ qj), compared against the
    /// independent index-arithmetic census. jobs bounds a worker pool over
    /// the orbits; reports are merged in parameter order.
    CensusSummary census(int jobs = 1) const;

    // Property sweeps used by `verify` and the acceptance suite.
    SweepResult restriction_suite(int jobs = 1) const;  // all theta, both kinds
    SweepResult oracle_suite() const;               // split evaluator == Borel induction
    SweepResult orthogonality_suite() const;        // all pairs, GL2 and SL2
    SweepResult degree_suite() const;               // R(1) closed forms
    SweepResult coset_identity_suite() const;       // |G| = |H| |T| / |T_H|
    SweepResult iso_suite(int samples_per_torus, unsigned seed) const;
    SweepResult census_suite(int jobs = 1) const;   // census vs index census
    SweepResult regularity_suite(int jobs = 1) const;  // predictions, all cuspidals

private:
    const GroupModel* gl2_;
    const GroupModel* sl2_;
    TorusDatum t_split_, t_nonsplit_, th_split_, th_nonsplit_;
    GreenTable green_g_, green_h_;
    std::optional<DlEvaluator> ev_split_, ev_nonsplit_, ev_h_split_, ev_h_nonsplit_;
};

}  // namespace dl2
