#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dl2 {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact arithmetic in the tower F_q c F_{q^2}, q = p^e with p odd and
/// q <= 11, built once and immutable afterwards.
///
/// Elements are integer codes. Writing x = a + b*t with a, b in F_q and t a
/// root of the defining quadratic f, the code of x is code(a) + q*code(b),
/// where F_q itself is coded 0..q-1 (residues for e = 1, a0 + p*a1 for the
/// quadratic case q = 9). The subfield F_q is therefore exactly the codes
/// 0..q-1, and addition/multiplication tables for F_{q^2} restrict to it.
///
/// The defining quadratic f = t^2 + f1*t + f0 is the lexicographically
/// smallest monic irreducible quadratic over F_q (coefficients compared in
/// descending-degree order, each by its canonical code). gamma2 is the
/// smallest code of multiplicative order q^2-1 and gamma1 = gamma2^(q+1)
/// generates F_q^x, so restricting characters never needs a case split.
/// The Frobenius x -> x^q is the generator of Gal(F_{q^2}/F_q).
class FieldTower {
public:
    FieldTower(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    int q2() const { return q2_; }
    /// Coefficients of f = t^2 + f1*t + f0 (codes in F_q).
    int f0() const { return f0_; }
    int f1() const { return f1_; }
    int gamma1() const { return gamma1_; }
    int gamma2() const { return gamma2_; }

    int add(int x, int y) const { return add_[x * q2_ + y]; }
    int sub(int x, int y) const { return add_[x * q2_ + neg_[y]]; }
    int mul(int x, int y) const { return mul_[x * q2_ + y]; }
    int neg(int x) const { return neg_[x]; }
    int inv(int x) const;
    int pow(int x, long k) const;

    /// x^q; fixes exactly the q subfield codes.
    int frobenius(int x) const { return frob_[x]; }
    /// Norm F_{q^2}^x -> F_q^x, x -> x^(q+1). Rejects zero.
    int norm(int x) const;

    bool in_base(int x) const { return x >= 0 && x < q_; }

    /// Discrete log base gamma2 (x nonzero in F_{q^2}).
    int dlog2(int x) const;
    /// Discrete log base gamma1 (x a nonzero subfield code).
    int dlog1(int x) const;
    int exp2(long k) const;
    int exp1(long k) const;

private:
    int p_, e_, q_, q2_;
    int f0_, f1_;
    int gamma1_, gamma2_;
    std::vector<int> add_, mul_, neg_, inv_;
    std::vector<int> frob_;
    std::vector<int> exp2_;   // gamma2^k, k = 0..q2-2
    std::vector<int> dlog2_;  // -1 at 0
    std::vector<int> dlog1_;  // base-field codes only, -1 at 0
};

/// Builds the tower; rejects p = 2 (p divides the Weyl group order 2) and
/// q > 11 (enumeration budget).
FieldTower make_field_tower(int p, int e);

/// Norm map as a free operation; x must be a nonzero F_{q^2} code.
int norm_map(const FieldTower& t, int x);

}  // namespace dl2
