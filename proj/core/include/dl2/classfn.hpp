#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dl2/group.hpp"

namespace dl2 {

using cd = std::complex<double>;

/// Absolute tolerance for equality and integrality of character data. All
/// asserted quantities are sums of at most |G| unit roots, so double
/// precision leaves orders of magnitude of headroom at q <= 11.
inline constexpr double kTol = 1e-6;

/// A complex-valued function constant on the conjugacy classes of its owner,
/// stored as one value per class in the owner's deterministic class order.
class ClassFunction {
public:
    ClassFunction(const GroupModel& owner, std::vector<cd> values);
    static ClassFunction zero(const GroupModel& owner);
    static ClassFunction trivial(const GroupModel& owner);

    const GroupModel& owner() const { return *owner_; }
    size_t size() const { return values_.size(); }
    cd at_class(int c) const { return values_.at(c); }
    cd at_code(int element_code) const;
    /// Value at the identity (class 0 by the canonical element ordering).
    cd degree() const { return values_.front(); }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction& operator*=(cd scalar);
    friend ClassFunction operator+(ClassFunction x, const ClassFunction& y) { return x += y; }
    friend ClassFunction operator-(ClassFunction x, const ClassFunction& y) { return x -= y; }
    friend ClassFunction operator*(cd s, ClassFunction x) { return x *= s; }

    const std::vector<cd>& values() const { return values_; }

private:
    const GroupModel* owner_;
    std::vector<cd> values_;
};

/// <f, g> = |G|^-1 sum over classes of size * f * conj(g).
cd inner_product(const ClassFunction& f, const ClassFunction& g);

/// Restriction along an inclusion of enumerated groups; h-classes look up the
/// containing class of the big group.
ClassFunction restrict_classfun(const ClassFunction& f, const GroupModel& h);

/// Frobenius induction of a function given on an arbitrary enumerated
/// subgroup: Ind f(g) = |S|^-1 sum over x in G with x^-1 g x in S of
/// f(x^-1 g x). values_on_elems[i] belongs to subgroup_elems[i].
ClassFunction induce_classfun(const GroupModel& g, std::span<const int> subgroup_elems,
                              std::span<const cd> values_on_elems);

/// Induction of a class function on an enumerated subgroup model.
ClassFunction induce_classfun(const ClassFunction& f, const GroupModel& g);

/// Tensor with the linear character omega(det(.)), where omega is the
/// character of F_q^x of the given index against gamma1.
ClassFunction twist_by_det(const ClassFunction& f, long omega_index);

double max_abs_diff(const ClassFunction& f, const ClassFunction& g);
bool approx_equal(const ClassFunction& f, const ClassFunction& g, double tol = kTol);

/// Rounds a complex number that ought to be a (real) integer; throws when it
/// is farther than tol from one.
long round_to_integer(cd z, double tol = kTol);

}  // namespace dl2
