#include "dl2/classfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dl2 {

ClassFunction::ClassFunction(const GroupModel& owner, std::vector<cd> values)
    : owner_(&owner), values_(std::move(values)) {
    if (values_.size() != owner.classes().size())
        throw Error("class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::zero(const GroupModel& owner) {
    return ClassFunction(owner, std::vector<cd>(owner.classes().size(), cd(0, 0)));
}

ClassFunction ClassFunction::trivial(const GroupModel& owner) {
    return ClassFunction(owner, std::vector<cd>(owner.classes().size(), cd(1, 0)));
}

cd ClassFunction::at_code(int element_code) const {
    return values_[owner_->class_of(element_code)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (owner_ != other.owner_) throw Error("class function owners differ");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    if (owner_ != other.owner_) throw Error("class function owners differ");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(cd scalar) {
    for (cd& v : values_) v *= scalar;
    return *this;
}

cd inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (&f.owner() != &g.owner()) throw Error("inner product needs a common owner");
    cd acc(0, 0);
    const auto& classes = f.owner().classes();
    for (size_t c = 0; c < classes.size(); ++c)
        acc += static_cast<double>(classes[c].size) * f.at_class(static_cast<int>(c)) *
               std::conj(g.at_class(static_cast<int>(c)));
    return acc / static_cast<double>(f.owner().order());
}

ClassFunction restrict_classfun(const ClassFunction& f, const GroupModel& h) {
    const GroupModel& g = f.owner();
    for (int code : h.elements())
        if (!g.contains(code)) throw Error("h is not contained in the owner group");
    std::vector<cd> vals;
    vals.reserve(h.classes().size());
    for (const ConjClass& cls : h.classes()) vals.push_back(f.at_code(cls.rep));
    return ClassFunction(h, std::move(vals));
}

ClassFunction induce_classfun(const GroupModel& g, std::span<const int> subgroup_elems,
                              std::span<const cd> values_on_elems) {
    if (subgroup_elems.size() != values_on_elems.size())
        throw Error("induction needs one value per subgroup element");
    if (subgroup_elems.empty()) throw Error("cannot induce from an empty subgroup");
    const FieldTower& t = g.tower();

    // value lookup by element code
    std::vector<int> pos(t.q() * t.q() * t.q() * t.q(), -1);
    for (size_t i = 0; i < subgroup_elems.size(); ++i) {
        if (!g.contains(subgroup_elems[i]))
            throw Error("subgroup element is outside the inducing group");
        pos[subgroup_elems[i]] = static_cast<int>(i);
    }

    std::vector<cd> vals(g.classes().size(), cd(0, 0));
    std::vector<Mat2> inverses;
    inverses.reserve(g.order());
    for (int code : g.elements()) inverses.push_back(mat_inv(t, decode_mat(t, code)));

    for (size_t c = 0; c < g.classes().size(); ++c) {
        const Mat2 rep = decode_mat(t, g.classes()[c].rep);
        cd acc(0, 0);
        for (size_t i = 0; i < g.elements().size(); ++i) {
            const Mat2 x = decode_mat(t, g.elements()[i]);
            const Mat2 y = mat_mul(t, mat_mul(t, inverses[i], rep), x);
            const int p = pos[encode_mat(t, y)];
            if (p >= 0) acc += values_on_elems[p];
        }
        vals[c] = acc / static_cast<double>(subgroup_elems.size());
    }
    return ClassFunction(g, std::move(vals));
}

ClassFunction induce_classfun(const ClassFunction& f, const GroupModel& g) {
    const GroupModel& h = f.owner();
    std::vector<cd> vals;
    vals.reserve(h.elements().size());
    for (size_t i = 0; i < h.elements().size(); ++i)
        vals.push_back(f.at_class(h.elem_class_raw()[i]));
    return induce_classfun(g, h.elements(), vals);
}

ClassFunction twist_by_det(const ClassFunction& f, long omega_index) {
    const GroupModel& g = f.owner();
    const FieldTower& t = g.tower();
    const long n = t.q() - 1;
    std::vector<cd> vals;
    vals.reserve(g.classes().size());
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const int det = mat_det(t, decode_mat(t, g.classes()[c].rep));
        const long k = ((omega_index * t.dlog1(det)) % n + n) % n;
        vals.push_back(f.at_class(static_cast<int>(c)) *
                       std::polar(1.0, 2.0 * std::numbers::pi *
                                           static_cast<double>(k) /
                                           static_cast<double>(n)));
    }
    return ClassFunction(g, std::move(vals));
}

double max_abs_diff(const ClassFunction& f, const ClassFunction& g) {
    if (&f.owner() != &g.owner()) throw Error("class function owners differ");
    double m = 0.0;
    for (size_t c = 0; c < f.size(); ++c)
        m = std::max(m, std::abs(f.at_class(static_cast<int>(c)) -
                                 g.at_class(static_cast<int>(c))));
    return m;
}

bool approx_equal(const ClassFunction& f, const ClassFunction& g, double tol) {
    return max_abs_diff(f, g) < tol;
}

long round_to_integer(cd z, double tol) {
    const double r = std::round(z.real());
    if (std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol)
        throw Error("value is not within tolerance of an integer");
    return static_cast<long>(r);
}

}  // namespace dl2
