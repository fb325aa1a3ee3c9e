#include "dl2/ffield.hpp"

#include <utility>

namespace dl2 {
namespace {

// Plain table-backed finite field used while constructing the tower.
struct TableField {
    int size = 0;
    std::vector<int> add, mul, neg, inv;

    int a(int x, int y) const { return add[x * size + y]; }
    int m(int x, int y) const { return mul[x * size + y]; }
};

TableField prime_field(int p) {
    TableField f;
    f.size = p;
    f.add.resize(p * p);
    f.mul.resize(p * p);
    f.neg.resize(p);
    f.inv.assign(p, -1);
    for (int x = 0; x < p; ++x) {
        f.neg[x] = (p - x) % p;
        for (int y = 0; y < p; ++y) {
            f.add[x * p + y] = (x + y) % p;
            f.mul[x * p + y] = (x * y) % p;
        }
    }
    for (int x = 1; x < p; ++x)
        for (int y = 1; y < p; ++y)
            if (f.m(x, y) == 1) f.inv[x] = y;
    return f;
}

// Lexicographically smallest monic irreducible t^2 + c1*t + c0 over the base,
// coefficients compared in descending-degree order. Degree 2, so
// irreducibility is exactly the absence of a root.
void smallest_irreducible_quadratic(const TableField& base, int* c1, int* c0) {
    for (int a = 0; a < base.size; ++a) {
        for (int b = 0; b < base.size; ++b) {
            bool has_root = false;
            for (int r = 0; r < base.size && !has_root; ++r) {
                int val = base.a(base.a(base.m(r, r), base.m(a, r)), b);
                if (val == 0) has_root = true;
            }
            if (!has_root) {
                *c1 = a;
                *c0 = b;
                return;
            }
        }
    }
    throw Error("no irreducible quadratic found (impossible over a finite field)");
}

// Quadratic extension base[t]/(t^2 + c1 t + c0); codes are lo + size*hi.
TableField quadratic_extension(const TableField& base, int c1, int c0) {
    const int n = base.size;
    TableField f;
    f.size = n * n;
    f.add.resize(f.size * f.size);
    f.mul.resize(f.size * f.size);
    f.neg.resize(f.size);
    f.inv.assign(f.size, -1);
    for (int x = 0; x < f.size; ++x) {
        const int xa = x % n, xb = x / n;
        f.neg[x] = base.neg[xa] + n * base.neg[xb];
        for (int y = 0; y < f.size; ++y) {
            const int ya = y % n, yb = y / n;
            f.add[x * f.size + y] = base.a(xa, ya) + n * base.a(xb, yb);
            // (xa + xb t)(ya + yb t) with t^2 = -c0 - c1 t
            const int tt = base.m(xb, yb);
            const int lo = base.a(base.m(xa, ya), base.neg[base.m(tt, c0)]);
            const int hi = base.a(base.a(base.m(xa, yb), base.m(xb, ya)),
                                  base.neg[base.m(tt, c1)]);
            f.mul[x * f.size + y] = lo + n * hi;
        }
    }
    for (int x = 1; x < f.size; ++x)
        for (int y = 1; y < f.size; ++y)
            if (f.m(x, y) == 1) f.inv[x] = y;
    return f;
}

}  // namespace

FieldTower::FieldTower(int p, int e) : p_(p), e_(e) {
    if (p < 2) throw Error("p must be a prime");
    if (p == 2) throw Error("p = 2 rejected: p divides the Weyl group order |W| = 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("p must be a prime");
    if (e < 1 || e > 2) throw Error("extension exponent e must be 1 or 2");
    long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > 11) throw Error("q = " + std::to_string(q) +
                            " exceeds the enumeration budget (q <= 11)");
    q_ = static_cast<int>(q);
    q2_ = q_ * q_;

    TableField base = prime_field(p_);
    if (e_ == 2) {
        int c1 = 0, c0 = 0;
        smallest_irreducible_quadratic(base, &c1, &c0);
        base = quadratic_extension(base, c1, c0);
    }
    smallest_irreducible_quadratic(base, &f1_, &f0_);
    TableField top = quadratic_extension(base, f1_, f0_);

    add_ = std::move(top.add);
    mul_ = std::move(top.mul);
    neg_ = std::move(top.neg);
    inv_ = std::move(top.inv);

    gamma2_ = -1;
    for (int x = 2; x < q2_ && gamma2_ < 0; ++x) {
        int ord = 1, acc = x;
        while (acc != 1 && ord < q2_) {
            acc = mul(acc, x);
            ++ord;
        }
        if (acc == 1 && ord == q2_ - 1) gamma2_ = x;
    }
    if (gamma2_ < 0) throw Error("no generator of F_{q^2}^x found (impossible)");

    const int n2 = q2_ - 1;
    exp2_.resize(n2);
    dlog2_.assign(q2_, -1);
    int acc = 1;
    for (int k = 0; k < n2; ++k) {
        exp2_[k] = acc;
        dlog2_[acc] = k;
        acc = mul(acc, gamma2_);
    }
    if (acc != 1) throw Error("gamma2 does not have order q^2-1 (corrupt tables)");

    gamma1_ = exp2_[q_ + 1];
    if (!in_base(gamma1_)) throw Error("Norm(gamma2) landed outside F_q (corrupt tables)");
    const int n1 = q_ - 1;
    dlog1_.assign(q_, -1);
    acc = 1;
    for (int k = 0; k < n1; ++k) {
        if (!in_base(acc) || dlog1_[acc] != -1)
            throw Error("gamma1 does not generate F_q^x (corrupt tables)");
        dlog1_[acc] = k;
        acc = mul(acc, gamma1_);
    }
    if (acc != 1) throw Error("gamma1 does not have order q-1 (corrupt tables)");

    frob_.resize(q2_);
    frob_[0] = 0;
    for (int k = 0; k < n2; ++k)
        frob_[exp2_[k]] = exp2_[(static_cast<long>(k) * q_) % (q2_ - 1)];
}

int FieldTower::inv(int x) const {
    if (x == 0) throw Error("division by zero in F_{q^2}");
    return inv_[x];
}

int FieldTower::pow(int x, long k) const {
    if (x == 0) {
        if (k <= 0) throw Error("0^k undefined for k <= 0");
        return 0;
    }
    const long n = q2_ - 1;
    long r = ((dlog2_[x] * (k % n)) % n + n) % n;
    return exp2_[r];
}

int FieldTower::norm(int x) const {
    if (x == 0) throw Error("norm of zero rejected");
    return mul(x, frobenius(x));
}

int FieldTower::dlog2(int x) const {
    if (x == 0) throw Error("discrete log of zero");
    return dlog2_[x];
}

int FieldTower::dlog1(int x) const {
    if (x == 0) throw Error("discrete log of zero");
    if (!in_base(x)) throw Error("dlog1 expects a subfield code");
    return dlog1_[x];
}

int FieldTower::exp2(long k) const {
    const long n = q2_ - 1;
    return exp2_[(k % n + n) % n];
}

int FieldTower::exp1(long k) const {
    const long n = q_ - 1;
    return exp2_[((k % n + n) % n) * (q_ + 1)];
}

FieldTower make_field_tower(int p, int e) { return FieldTower(p, e); }

int norm_map(const FieldTower& t, int x) { return t.norm(x); }

}  // namespace dl2
