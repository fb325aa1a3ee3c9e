#include "dl2/restlab.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "../src/parallel.hpp"

namespace dl2 {

namespace {

std::string torus_name(TorusKind k) {
    return k == TorusKind::split ? "split" : "nonsplit";
}

std::string theta_name(TorusKind k, long j1, long j2) {
    std::ostringstream os;
    if (k == TorusKind::split)
        os << "(" << j1 << "," << j2 << ")";
    else
        os << j1;
    return os.str();
}

}  // namespace

Lab::Lab(const GroupModel& gl2, const GroupModel& sl2)
    : gl2_(&gl2),
      sl2_(&sl2),
      t_split_(make_torus(gl2, TorusKind::split)),
      t_nonsplit_(make_torus(gl2, TorusKind::nonsplit)),
      th_split_(intersect_torus(t_split_, sl2)),
      th_nonsplit_(intersect_torus(t_nonsplit_, sl2)),
      green_g_(GreenTable::build(gl2)),
      green_h_(GreenTable::build(sl2)) {
    if (gl2.kind() != GroupKind::gl2 || sl2.det_order() != 1)
        throw Error("Lab expects a GL2 model and an SL2 model");
    if (&gl2.tower() != &sl2.tower()) throw Error("models use different towers");
    ev_split_.emplace(gl2, t_split_, green_g_);
    ev_nonsplit_.emplace(gl2, t_nonsplit_, green_g_);
    ev_h_split_.emplace(sl2, th_split_, green_h_);
    ev_h_nonsplit_.emplace(sl2, th_nonsplit_, green_h_);
}

const TorusDatum& Lab::torus(TorusKind k) const {
    return k == TorusKind::split ? t_split_ : t_nonsplit_;
}
const TorusDatum& Lab::subtorus(TorusKind k) const {
    return k == TorusKind::split ? th_split_ : th_nonsplit_;
}
const DlEvaluator& Lab::evaluator(TorusKind k) const {
    return k == TorusKind::split ? *ev_split_ : *ev_nonsplit_;
}
const DlEvaluator& Lab::sub_evaluator(TorusKind k) const {
    return k == TorusKind::split ? *ev_h_split_ : *ev_h_nonsplit_;
}

TorusCharacter Lab::character(TorusKind k, long j1, long j2) const {
    return make_character(torus(k), j1, j2);
}

std::pair<const TorusDatum*, TorusCharacter> Lab::restrict_datum(
    TorusKind k, const TorusCharacter& theta) const {
    const TorusDatum& sub = subtorus(k);
    return {&sub, restrict_character(theta, sub)};
}

double Lab::restriction_deviation(TorusKind k, const TorusCharacter& theta) const {
    const ClassFunction lhs =
        restrict_classfun(evaluator(k).character(theta), *sl2_);
    const auto [sub, theta_h] = restrict_datum(k, theta);
    const ClassFunction rhs = sub_evaluator(k).character(theta_h);
    return max_abs_diff(lhs, rhs);
}

double Lab::iso_invariance_deviation(TorusKind k, const TorusCharacter& theta,
                                     const Mat2& g) const {
    const TorusDatum moved = conjugate_torus(torus(k), g);
    // theta o Ad(g^-1) has the same index against the transported parameters.
    const TorusCharacter theta_moved = make_character(moved, theta.j1, theta.j2);
    const DlEvaluator ev(*gl2_, moved, green_g_);
    return max_abs_diff(ev.character(theta_moved), evaluator(k).character(theta));
}

RestrictionReport Lab::clifford_analyze(const ClassFunction& chi,
                                        const GroupModel& h) const {
    if (&chi.owner() != gl2_) throw Error("clifford_analyze expects a GL2 character");
    if (h.kind() != GroupKind::det_subgroup)
        throw Error("clifford_analyze expects a determinant subgroup");
    if (round_to_integer(inner_product(chi, chi)) != 1)
        throw Error("chi is not irreducible; refusing to analyze a virtual character");

    RestrictionReport rep;
    rep.q = q();
    rep.subgroup_det_order = h.det_order();
    rep.dim_chi = round_to_integer(chi.degree());

    const ClassFunction res = restrict_classfun(chi, h);
    rep.restriction_norm = round_to_integer(inner_product(res, res));

    // Twist stabilizer: characters of F_q^x trivial on det(h) are the indices
    // divisible by |det(h)|.
    const long n = q() - 1;
    rep.twist_stabilizer = 0;
    for (long k = 0; k < n; k += h.det_order())
        if (approx_equal(twist_by_det(chi, k), chi)) ++rep.twist_stabilizer;

    // Solve m^2 t = n subject to (m t) | dim chi.
    for (long m = 1; m * m <= rep.restriction_norm; ++m) {
        if (rep.restriction_norm % (m * m) != 0) continue;
        const long t = rep.restriction_norm / (m * m);
        if (rep.dim_chi % (m * t) == 0) rep.candidates.emplace_back(m, t);
    }
    rep.unique_solution = rep.candidates.size() == 1;
    if (rep.unique_solution) {
        rep.multiplicity = rep.candidates.front().first;
        rep.component_count = rep.candidates.front().second;
        rep.inertia_index = rep.component_count;
        rep.dim_components = rep.dim_chi / (rep.multiplicity * rep.component_count);
    }
    rep.clifford_consistent =
        rep.twist_stabilizer == rep.restriction_norm &&
        (!rep.unique_solution ||
         rep.multiplicity * rep.multiplicity * rep.component_count ==
             rep.restriction_norm);
    return rep;
}

RestrictionReport Lab::analyze_cuspidal(long j) const {
    const TorusCharacter theta = character(TorusKind::nonsplit, j);
    if (!is_regular(theta)) throw Error("cuspidal analysis needs a regular theta");

    const ClassFunction chi =
        cuspidal_character(evaluator(TorusKind::nonsplit), theta);
    RestrictionReport rep = clifford_analyze(chi, *sl2_);
    rep.torus = TorusKind::nonsplit;
    rep.theta_j1 = theta.j1;
    rep.theorem_deviation = restriction_deviation(TorusKind::nonsplit, theta);

    const auto [sub, theta_h] = restrict_datum(TorusKind::nonsplit, theta);
    rep.theta_h_index = theta_h.j1;
    rep.theta_regular = is_regular(theta);
    rep.theta_h_regular = is_regular(theta_h);
    rep.theta_h_regular_in_g =
        is_regular_in_ambient(theta_h, torus(TorusKind::nonsplit), *gl2_);

    // Multiplicity free always; single component exactly when theta_H is
    // regular in G. The Weyl action has order 2, so the alternative is t = 2.
    const long predicted_t = rep.theta_h_regular_in_g ? 1 : 2;
    rep.prediction_matched = rep.unique_solution && rep.multiplicity == 1 &&
                             rep.component_count == predicted_t;
    return rep;
}

CensusSummary Lab::census(int jobs) const {
    const long n = static_cast<long>(q()) * q() - 1;
    CensusSummary cs;
    cs.q = q();
    cs.expected_orbits = static_cast<long>(q()) * (q() - 1) / 2;
    cs.all_multiplicity_free = true;
    cs.all_predictions_matched = true;

    std::vector<long> orbit_minima;
    for (long j = 1; j < n; ++j) {
        if (j % (q() + 1) == 0) continue;  // not regular
        if ((j * q()) % n < j) continue;   // not the orbit minimum
        orbit_minima.push_back(j);
        if ((2 * j) % (q() + 1) == 0) ++cs.expected_split;
    }

    cs.reports.resize(orbit_minima.size());
    detail::parallel_for(orbit_minima.size(), jobs, [&](size_t i) {
        cs.reports[i] = analyze_cuspidal(orbit_minima[i]);
    });

    for (const RestrictionReport& rep : cs.reports) {
        cs.max_theorem_deviation =
            std::max(cs.max_theorem_deviation, rep.theorem_deviation);
        ++cs.orbit_count;
        if (rep.component_count == 1) ++cs.single_component;
        if (rep.component_count == 2) ++cs.split_component;
        if (rep.multiplicity != 1) cs.all_multiplicity_free = false;
        if (!rep.prediction_matched) cs.all_predictions_matched = false;
    }
    cs.matches_index_census = cs.orbit_count == cs.expected_orbits &&
                              cs.split_component == cs.expected_split &&
                              cs.single_component + cs.split_component ==
                                  cs.orbit_count;
    return cs;
}

SweepResult Lab::restriction_suite(int jobs) const {
    SweepResult r;
    r.name = "restriction";
    r.q = q();
    struct Case {
        TorusKind kind;
        long j1, j2;
    };
    std::vector<Case> cases;
    const long n = static_cast<long>(q()) * q() - 1;
    for (long j = 0; j < n; ++j) cases.push_back({TorusKind::nonsplit, j, 0});
    for (long j1 = 0; j1 < q() - 1; ++j1)
        for (long j2 = 0; j2 < q() - 1; ++j2)
            cases.push_back({TorusKind::split, j1, j2});

    std::vector<double> devs(cases.size());
    detail::parallel_for(cases.size(), jobs, [&](size_t i) {
        devs[i] = restriction_deviation(
            cases[i].kind, character(cases[i].kind, cases[i].j1, cases[i].j2));
    });
    for (size_t i = 0; i < cases.size(); ++i) {
        r.max_deviation = std::max(r.max_deviation, devs[i]);
        ++r.checks;
        if (devs[i] >= kTol)
            r.failures.push_back("q=" + std::to_string(q()) + " " +
                                 torus_name(cases[i].kind) + " theta=" +
                                 theta_name(cases[i].kind, cases[i].j1, cases[i].j2));
    }
    return r;
}

SweepResult Lab::oracle_suite() const {
    SweepResult r;
    r.name = "split-oracle";
    r.q = q();
    for (long j1 = 0; j1 < q() - 1; ++j1)
        for (long j2 = 0; j2 < q() - 1; ++j2) {
            const TorusCharacter theta = character(TorusKind::split, j1, j2);
            const double dev =
                max_abs_diff(evaluator(TorusKind::split).character(theta),
                             borel_induction(*gl2_, theta));
            r.max_deviation = std::max(r.max_deviation, dev);
            ++r.checks;
            if (dev >= kTol)
                r.failures.push_back("q=" + std::to_string(q()) + " GL2 theta=" +
                                     theta_name(TorusKind::split, j1, j2));
        }
    for (long j = 0; j < q() - 1; ++j) {
        const TorusCharacter theta = make_character(th_split_, j);
        const double dev =
            max_abs_diff(sub_evaluator(TorusKind::split).character(theta),
                         borel_induction(*sl2_, theta));
        r.max_deviation = std::max(r.max_deviation, dev);
        ++r.checks;
        if (dev >= kTol)
            r.failures.push_back("q=" + std::to_string(q()) + " SL2 theta=" +
                                 std::to_string(j));
    }
    return r;
}

namespace {

struct LabeledCharacter {
    TorusKind kind;
    long j1, j2;
    ClassFunction value;
};

// Number of Weyl elements w with theta o w = theta'; tori of different kinds
// never pair.
long weyl_compatibility(int q, const TorusDatum& torus, TorusKind k1, long a1,
                        long a2, TorusKind k2, long b1, long b2) {
    if (k1 != k2) return 0;
    long count = 0;
    if (torus.pair_param) {
        const long n = q - 1;
        if ((a1 - b1) % n == 0 && (a2 - b2) % n == 0) ++count;
        if ((a2 - b1) % n == 0 && (a1 - b2) % n == 0) ++count;
    } else {
        const long n = torus.cyc_order;
        if ((a1 - b1) % n == 0) ++count;
        if ((a1 * torus.weyl_mult - b1) % n == 0) ++count;
    }
    return count;
}

}  // namespace

SweepResult Lab::orthogonality_suite() const {
    SweepResult r;
    r.name = "orthogonality";
    r.q = q();
    const auto run_group = [&](const GroupModel&, const DlEvaluator& ev_s,
                               const DlEvaluator& ev_ns, const TorusDatum& ts,
                               const TorusDatum& tns, const std::string& label) {
        std::vector<LabeledCharacter> chars;
        if (ts.pair_param) {
            for (long j1 = 0; j1 < q() - 1; ++j1)
                for (long j2 = 0; j2 < q() - 1; ++j2)
                    chars.push_back({TorusKind::split, j1, j2,
                                     ev_s.character(make_character(ts, j1, j2))});
        } else {
            for (long j = 0; j < ts.cyc_order; ++j)
                chars.push_back(
                    {TorusKind::split, j, 0, ev_s.character(make_character(ts, j))});
        }
        for (long j = 0; j < tns.cyc_order; ++j)
            chars.push_back(
                {TorusKind::nonsplit, j, 0, ev_ns.character(make_character(tns, j))});

        for (const auto& x : chars)
            for (const auto& y : chars) {
                const TorusDatum& ref = x.kind == TorusKind::split ? ts : tns;
                const long expected =
                    weyl_compatibility(q(), ref, x.kind, x.j1, x.j2, y.kind, y.j1, y.j2);
                const cd ip = inner_product(x.value, y.value);
                const double dev = std::abs(ip - cd(static_cast<double>(expected), 0));
                r.max_deviation = std::max(r.max_deviation, dev);
                ++r.checks;
                if (dev >= kTol)
                    r.failures.push_back(
                        label + " q=" + std::to_string(q()) + " " +
                        torus_name(x.kind) + theta_name(x.kind, x.j1, x.j2) + " vs " +
                        torus_name(y.kind) + theta_name(y.kind, y.j1, y.j2));
            }
    };
    run_group(*gl2_, *ev_split_, *ev_nonsplit_, t_split_, t_nonsplit_, "GL2");
    run_group(*sl2_, *ev_h_split_, *ev_h_nonsplit_, th_split_, th_nonsplit_, "SL2");
    return r;
}

SweepResult Lab::degree_suite() const {
    SweepResult r;
    r.name = "degrees";
    r.q = q();
    const auto check = [&](const DlEvaluator& ev, const TorusCharacter& theta,
                           long expected, const std::string& label) {
        const double dev =
            std::abs(ev.character(theta).degree() - cd(static_cast<double>(expected), 0));
        r.max_deviation = std::max(r.max_deviation, dev);
        ++r.checks;
        if (dev >= kTol) r.failures.push_back(label);
    };
    for (long j1 = 0; j1 < q() - 1; ++j1)
        for (long j2 = 0; j2 < q() - 1; ++j2)
            check(*ev_split_, character(TorusKind::split, j1, j2), q() + 1,
                  "q=" + std::to_string(q()) + " split " + theta_name(TorusKind::split, j1, j2));
    const long n = static_cast<long>(q()) * q() - 1;
    for (long j = 0; j < n; ++j)
        check(*ev_nonsplit_, character(TorusKind::nonsplit, j), 1 - q(),
              "q=" + std::to_string(q()) + " nonsplit " + std::to_string(j));
    return r;
}

SweepResult Lab::coset_identity_suite() const {
    SweepResult r;
    r.name = "coset-identity";
    r.q = q();
    for (TorusKind k : {TorusKind::split, TorusKind::nonsplit}) {
        const long lhs = gl2_->order();
        const long rhs = sl2_->order() * torus(k).order() / subtorus(k).order();
        ++r.checks;
        if (lhs != rhs)
            r.failures.push_back("q=" + std::to_string(q()) + " " + torus_name(k) +
                                 ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    }
    return r;
}

SweepResult Lab::iso_suite(int samples_per_torus, unsigned seed) const {
    SweepResult r;
    r.name = "iso-invariance";
    r.q = q();
    std::mt19937 rng(seed);
    for (TorusKind k : {TorusKind::split, TorusKind::nonsplit}) {
        const long theta_mod = torus(k).pair_param ? q() - 1 : torus(k).cyc_order;
        for (int i = 0; i < samples_per_torus; ++i) {
            const Mat2 g = decode_mat(
                gl2_->tower(),
                gl2_->elements()[rng() % gl2_->elements().size()]);
            const TorusCharacter theta = character(
                k, static_cast<long>(rng() % theta_mod),
                static_cast<long>(rng() % theta_mod));
            const double dev = iso_invariance_deviation(k, theta, g);
            r.max_deviation = std::max(r.max_deviation, dev);
            ++r.checks;
            if (dev >= kTol)
                r.failures.push_back("q=" + std::to_string(q()) + " " + torus_name(k) +
                                     " sample " + std::to_string(i));
        }
    }
    return r;
}

SweepResult Lab::census_suite(int jobs) const {
    SweepResult r;
    r.name = "census";
    r.q = q();
    const CensusSummary cs = census(jobs);
    r.checks = cs.orbit_count;
    r.max_deviation = cs.max_theorem_deviation;
    if (!cs.matches_index_census)
        r.failures.push_back("q=" + std::to_string(q()) +
                             ": census does not match the index census");
    if (!cs.all_multiplicity_free)
        r.failures.push_back("q=" + std::to_string(q()) + ": multiplicity above 1");
    return r;
}

SweepResult Lab::regularity_suite(int jobs) const {
    SweepResult r;
    r.name = "regularity-prediction";
    r.q = q();
    const CensusSummary cs = census(jobs);
    r.checks = cs.orbit_count;
    r.max_deviation = cs.max_theorem_deviation;
    for (const RestrictionReport& rep : cs.reports)
        if (!rep.prediction_matched)
            r.failures.push_back("q=" + std::to_string(q()) +
                                 " j=" + std::to_string(rep.theta_j1));
    return r;
}

}  // namespace dl2
