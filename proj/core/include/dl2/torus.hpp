#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "dl2/group.hpp"

namespace dl2 {

/// exp(2*pi*i * num/den), kept in exact integer form until a complex value is
/// actually needed. num is normalized into [0, den).
struct RootOfUnity {
    long num = 0;
    long den = 1;

    static RootOfUnity make(long num, long den);
    RootOfUnity reduced() const;
    std::complex<double> value() const;
    friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
        return x.num * y.den == y.num * x.den;
    }
};

enum class TorusKind { split, nonsplit };

/// The companion-matrix ring embedding F_{q^2} -> M2(F_q) determined by the
/// tower's defining quadratic f.
Mat2 embed_quadratic(const FieldTower& t, int z);

/// An F-stable maximal torus at the finite level: the rational points, a
/// parametrization by the tower's fixed generators, the Weyl action (both as
/// a normalizer representative and as its effect on parameters), and split
/// rank bookkeeping.
///
/// Parametrizations:
///   pair_param: points are diag(gamma1^a, gamma1^b), params (a, b) mod q-1
///   cyclic:     points are generator^a, params (a, 0) mod cyc_order
struct TorusDatum {
    TorusKind kind = TorusKind::split;
    const GroupModel* owner = nullptr;
    std::vector<int> points;  // codes, ascending

    bool pair_param = false;
    int generator = -1;   // cyclic case
    long cyc_order = 0;   // cyclic case: |T^Fr|
    long weyl_mult = 0;   // cyclic case: the action is t -> t^weyl_mult
    bool weyl_swap = false;  // pair case: the action swaps the exponents
    int weyl_rep = -1;    // code of a normalizer element inducing the action
    int split_rank = 0;

    bool contains(int code) const;
    /// (a, b) parameters of a torus point.
    std::pair<int, int> param(int code) const;
    long order() const { return static_cast<long>(points.size()); }

    std::vector<int> par1_by_code, par2_by_code;  // -1 outside the torus
};

/// The two GL2 torus classes; also accepts an SL2 model, where the same kinds
/// mean diag(a, a^-1) and the norm-one subgroup of the embedded F_{q^2}^x.
TorusDatum make_torus(const GroupModel& g, TorusKind kind);

/// T^Fr intersected with a determinant subgroup of the owner, with the
/// canonical reduced parametrization when the intersection is cyclic.
TorusDatum intersect_torus(const TorusDatum& torus, const GroupModel& h);

/// Transport of the full datum under an inner automorphism x -> g x g^-1.
TorusDatum conjugate_torus(const TorusDatum& torus, const Mat2& g);

/// Character of T^Fr. Cyclic parametrization: theta(gen^a) = zeta^(j1*a) with
/// zeta = exp(2*pi*i/cyc_order). Pair parametrization: indices (j1, j2) mod
/// q-1 against (gamma1, gamma1).
struct TorusCharacter {
    const TorusDatum* owner = nullptr;
    long j1 = 0, j2 = 0;
};

TorusCharacter make_character(const TorusDatum& torus, long j1, long j2 = 0);
RootOfUnity evaluate(const TorusCharacter& theta, int point_code);

/// theta restricted to an intersected torus, re-indexed against the
/// subtorus's own generator conventions.
TorusCharacter restrict_character(const TorusCharacter& theta, const TorusDatum& sub);

/// Trivial Weyl stabilizer (general position): theta composed with the Weyl
/// action differs from theta.
bool is_regular(const TorusCharacter& theta);

/// Regularity in the ambient group: no element of N_{G^Fr}(T) outside T^Fr
/// fixes theta_h. ambient_torus is the ambient maximal torus T whose
/// intersection produced theta_h's owner; ambient is the ambient group model.
bool is_regular_in_ambient(const TorusCharacter& theta_h,
                           const TorusDatum& ambient_torus,
                           const GroupModel& ambient);

/// Setwise normalizer of the torus point set, as element codes.
std::vector<int> torus_normalizer(const TorusDatum& torus, const GroupModel& g);

}  // namespace dl2
