#include "dl2/dlchar.hpp"

#include <algorithm>

namespace dl2 {

namespace {

bool is_gl2_or_sl2(const GroupModel& g) {
    return g.kind() == GroupKind::gl2 || g.det_order() == 1;
}

}  // namespace

GreenTable GreenTable::build_unvalidated(const GroupModel& g) {
    if (!is_gl2_or_sl2(g))
        throw Error("Green tables exist only for the GL2 and SL2 models");
    const int q = g.tower().q();

    GreenTable table;
    table.group_ = &g;

    // Unipotent classes, identity first by the canonical class order.
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const Mat2 rep = decode_mat(g.tower(), g.classes()[c].rep);
        if (is_unipotent(g, rep)) table.unip_classes_.push_back(static_cast<int>(c));
    }
    const size_t expected = (g.kind() == GroupKind::gl2) ? 2 : 3;
    if (table.unip_classes_.size() != expected)
        throw Error("unexpected number of unipotent classes");

    for (int uc : table.unip_classes_) {
        const bool id = uc == 0;
        table.entries_[{CentralizerClass::full_group, TorusKind::split, uc}] =
            id ? q + 1 : 1;
        table.entries_[{CentralizerClass::full_group, TorusKind::nonsplit, uc}] =
            id ? 1 - q : 1;
    }
    // A torus as its own centralizer has a single unipotent element.
    table.entries_[{CentralizerClass::maximal_torus, TorusKind::split, 0}] = 1;
    table.entries_[{CentralizerClass::maximal_torus, TorusKind::nonsplit, 0}] = 1;
    return table;
}

GreenTable GreenTable::build(const GroupModel& g) {
    GreenTable table = build_unvalidated(g);
    const int q = g.tower().q();

    // Validation: with theta = 1 the evaluator must reproduce the degrees
    // q+1 and 1-q and the orthogonality integers <R,R> = |W| = 2 and
    // <R_split, R_nonsplit> = 0. Refuse to serve the table otherwise.
    const TorusDatum split = make_torus(g, TorusKind::split);
    const TorusDatum nonsplit = make_torus(g, TorusKind::nonsplit);
    const DlEvaluator ev_s(g, split, table);
    const DlEvaluator ev_ns(g, nonsplit, table);
    const ClassFunction r_s = ev_s.character(make_character(split, 0, 0));
    const ClassFunction r_ns = ev_ns.character(make_character(nonsplit, 0));

    const bool ok = round_to_integer(r_s.degree()) == q + 1 &&
                    round_to_integer(r_ns.degree()) == 1 - q &&
                    round_to_integer(inner_product(r_s, r_s)) == 2 &&
                    round_to_integer(inner_product(r_ns, r_ns)) == 2 &&
                    round_to_integer(inner_product(r_s, r_ns)) == 0;
    if (!ok) throw Error("Green table failed its validation suite");
    return table;
}

long GreenTable::value(const GreenKey& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw Error("no Green function value for this key");
    return it->second;
}

DlEvaluator::DlEvaluator(const GroupModel& g, const TorusDatum& torus,
                         const GreenTable& table)
    : group_(&g), torus_(&torus), table_(&table) {
    if (&table.group() != &g) throw Error("Green table belongs to a different group");
    if (torus.owner != &g) throw Error("torus belongs to a different group");
    const FieldTower& t = g.tower();

    // Position of each torus point in torus.points, by element code.
    std::vector<int> point_pos(t.q() * t.q() * t.q() * t.q(), -1);
    for (size_t i = 0; i < torus.points.size(); ++i)
        point_pos[torus.points[i]] = static_cast<int>(i);

    // Decoded elements and inverses, shared by the per-class fiber scans.
    std::vector<Mat2> xs, xinvs;
    xs.reserve(g.order());
    xinvs.reserve(g.order());
    for (int code : g.elements()) {
        xs.push_back(decode_mat(t, code));
        xinvs.push_back(mat_inv(t, xs.back()));
    }

    class_data_.resize(g.classes().size());
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const Mat2 rep = decode_mat(t, g.classes()[c].rep);
        const auto [s, u] = jordan_decompose(g, rep);
        ClassData& data = class_data_[c];
        if (is_central(s)) {
            data.central = true;
            data.s_point = encode_mat(t, s);
            if (!torus.contains(data.s_point))
                throw Error("central element missing from the torus");
            data.unip_class = g.class_of(encode_mat(t, u));
            continue;
        }
        // Non-central semisimple part: in GL2/SL2 with q odd the element is
        // regular, its connected centralizer is a maximal torus, and the
        // unipotent part is forced to be trivial.
        if (!(u == mat_identity()))
            throw Error("centralizer type outside {full group, torus}");
        data.centralizer_order = g.order() / g.classes()[c].size;
        data.fiber.assign(torus.points.size(), 0);
        for (size_t i = 0; i < xs.size(); ++i) {
            const Mat2 y = mat_mul(t, mat_mul(t, xinvs[i], s), xs[i]);
            const int pos = point_pos[encode_mat(t, y)];
            if (pos >= 0) ++data.fiber[pos];
        }
    }
}

ClassFunction DlEvaluator::character(const TorusCharacter& theta) const {
    if (theta.owner != torus_) throw Error("character lives on a different torus");
    std::vector<cd> vals(class_data_.size());
    for (size_t c = 0; c < class_data_.size(); ++c) {
        const ClassData& data = class_data_[c];
        if (data.central) {
            const long green = table_->value(
                {CentralizerClass::full_group, torus_->kind, data.unip_class});
            vals[c] = evaluate(theta, data.s_point).value() *
                      static_cast<double>(green);
            continue;
        }
        // Regular semisimple: Q^T_T(1) = 1 and the fiber sum divides out.
        cd acc(0, 0);
        for (size_t i = 0; i < data.fiber.size(); ++i) {
            if (data.fiber[i] == 0) continue;
            acc += static_cast<double>(data.fiber[i]) *
                   evaluate(theta, torus_->points[i]).value();
        }
        vals[c] = acc / static_cast<double>(data.centralizer_order);
    }
    return ClassFunction(*group_, std::move(vals));
}

ClassFunction dl_character(const GroupModel& g, const TorusDatum& torus,
                           const TorusCharacter& theta) {
    const GreenTable table = GreenTable::build(g);
    return DlEvaluator(g, torus, table).character(theta);
}

int eps_sign(const GroupModel& g, const TorusDatum& torus) {
    return ((g.split_rank() - torus.split_rank) % 2 == 0) ? 1 : -1;
}

ClassFunction cuspidal_character(const DlEvaluator& eval, const TorusCharacter& theta) {
    if (eval.torus().kind != TorusKind::nonsplit)
        throw Error("cuspidal characters come from the nonsplit torus");
    if (!is_regular(theta))
        throw Error("theta is not regular; the character would be reducible");
    ClassFunction chi = eval.character(theta);
    chi *= cd(eps_sign(eval.group(), eval.torus()), 0);
    if (round_to_integer(inner_product(chi, chi)) != 1 ||
        round_to_integer(chi.degree()) <= 0)
        throw Error("cuspidal character failed its irreducibility check");
    return chi;
}

ClassFunction cuspidal_character(const GroupModel& g, const TorusDatum& nonsplit_torus,
                                 const TorusCharacter& theta) {
    const GreenTable table = GreenTable::build(g);
    return cuspidal_character(DlEvaluator(g, nonsplit_torus, table), theta);
}

ClassFunction borel_induction(const GroupModel& g, const TorusCharacter& theta_split) {
    if (!is_gl2_or_sl2(g)) throw Error("Borel induction expects a GL2 or SL2 model");
    if (theta_split.owner->kind != TorusKind::split)
        throw Error("Borel induction takes a character of the split torus");
    const FieldTower& t = g.tower();

    std::vector<int> elems;
    std::vector<cd> vals;
    for (int x = 1; x < t.q(); ++x)
        for (int d = 1; d < t.q(); ++d) {
            if (g.kind() != GroupKind::gl2 && t.mul(x, d) != 1) continue;
            const int diag_code = encode_mat(t, {x, 0, 0, d});
            const cd value = evaluate(theta_split, diag_code).value();
            for (int upper = 0; upper < t.q(); ++upper) {
                elems.push_back(encode_mat(t, {x, upper, 0, d}));
                vals.push_back(value);
            }
        }
    return induce_classfun(g, elems, vals);
}

}  // namespace dl2
