#include "dl2/torus.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace dl2 {

RootOfUnity RootOfUnity::make(long num, long den) {
    if (den <= 0) throw Error("root of unity needs a positive order");
    num %= den;
    if (num < 0) num += den;
    return {num, den};
}

RootOfUnity RootOfUnity::reduced() const {
    const long g = std::gcd(num, den);
    return g == 0 ? RootOfUnity{0, 1} : RootOfUnity{num / g, den / g};
}

std::complex<double> RootOfUnity::value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                               static_cast<double>(den));
}

Mat2 embed_quadratic(const FieldTower& t, int z) {
    const int a = z % t.q(), b = z / t.q();
    // a*I + b*C with C the companion matrix of t^2 + f1*t + f0.
    return {a, t.mul(t.neg(t.f0()), b), b, t.sub(a, t.mul(t.f1(), b))};
}

bool TorusDatum::contains(int code) const {
    return code >= 0 && code < static_cast<int>(par1_by_code.size()) &&
           par1_by_code[code] >= 0;
}

std::pair<int, int> TorusDatum::param(int code) const {
    if (!contains(code)) throw Error("element is not a torus point");
    return {par1_by_code[code], par2_by_code[code]};
}

namespace {

void index_points(TorusDatum& torus) {
    const FieldTower& t = torus.owner->tower();
    const int bound = t.q() * t.q() * t.q() * t.q();
    torus.par1_by_code.assign(bound, -1);
    torus.par2_by_code.assign(bound, -1);
}

void set_param(TorusDatum& torus, int code, int a, int b) {
    torus.par1_by_code[code] = a;
    torus.par2_by_code[code] = b;
}

int expected_cyclic_image(const TorusDatum& torus) {
    // Point the generator must map to under the Weyl action.
    const long a = torus.weyl_mult % torus.cyc_order;
    for (int code : torus.points)
        if (torus.par1_by_code[code] == a) return code;
    throw Error("cyclic torus parametrization is incomplete");
}

// Smallest non-torus element whose conjugation induces the recorded action on
// the generators (hence on every point).
int find_weyl_rep(const TorusDatum& torus, const GroupModel& g) {
    const FieldTower& t = g.tower();
    if (torus.pair_param) {
        const Mat2 d1{t.gamma1(), 0, 0, 1}, d2{1, 0, 0, t.gamma1()};
        const int c1 = encode_mat(t, d1), c2 = encode_mat(t, d2);
        for (int code : g.elements()) {
            if (torus.contains(code)) continue;
            const Mat2 w = decode_mat(t, code);
            if (encode_mat(t, mat_conj(t, w, d1)) == c2 &&
                encode_mat(t, mat_conj(t, w, d2)) == c1)
                return code;
        }
    } else {
        const Mat2 gen = decode_mat(t, torus.generator);
        const int target = expected_cyclic_image(torus);
        for (int code : g.elements()) {
            if (torus.contains(code)) continue;
            const Mat2 w = decode_mat(t, code);
            if (encode_mat(t, mat_conj(t, w, gen)) == target) return code;
        }
    }
    throw Error("no Weyl representative found in the normalizer");
}

}  // namespace

TorusDatum make_torus(const GroupModel& g, TorusKind kind) {
    const FieldTower& t = g.tower();
    const bool is_gl2 = g.kind() == GroupKind::gl2;
    if (!is_gl2 && g.det_order() != 1)
        throw Error("make_torus expects a GL2 or SL2 model");

    TorusDatum torus;
    torus.kind = kind;
    torus.owner = &g;
    index_points(torus);

    if (kind == TorusKind::split && is_gl2) {
        torus.pair_param = true;
        torus.weyl_swap = true;
        torus.split_rank = 2;
        for (int x = 1; x < t.q(); ++x)
            for (int y = 1; y < t.q(); ++y) {
                const int code = encode_mat(t, {x, 0, 0, y});
                torus.points.push_back(code);
                set_param(torus, code, t.dlog1(x), t.dlog1(y));
            }
    } else {
        // All remaining kinds are cyclic.
        long order = 0;
        int gen2 = 0;  // exponent step in F_{q^2}^x
        if (kind == TorusKind::nonsplit) {
            order = is_gl2 ? t.q2() - 1 : t.q() + 1;
            gen2 = is_gl2 ? 1 : t.q() - 1;
            torus.weyl_mult = t.q() % order;
            torus.split_rank = is_gl2 ? 1 : 0;
            torus.generator = encode_mat(t, embed_quadratic(t, t.exp2(gen2)));
            for (long k = 0; k < order; ++k) {
                const int code =
                    encode_mat(t, embed_quadratic(t, t.exp2(gen2 * k)));
                torus.points.push_back(code);
                set_param(torus, code, static_cast<int>(k), 0);
            }
        } else {  // split torus of SL2: diag(a, a^-1)
            order = t.q() - 1;
            torus.weyl_mult = order - 1;  // inversion
            torus.split_rank = 1;
            const int g1 = t.gamma1();
            torus.generator = encode_mat(t, {g1, 0, 0, t.inv(g1)});
            for (long k = 0; k < order; ++k) {
                const int x = t.exp1(k);
                const int code = encode_mat(t, {x, 0, 0, t.inv(x)});
                torus.points.push_back(code);
                set_param(torus, code, static_cast<int>(k), 0);
            }
        }
        torus.cyc_order = order;
    }

    for (int code : torus.points)
        if (!g.contains(code)) throw Error("torus point fell outside the group");
    std::sort(torus.points.begin(), torus.points.end());
    torus.weyl_rep = find_weyl_rep(torus, g);
    return torus;
}

TorusDatum intersect_torus(const TorusDatum& torus, const GroupModel& h) {
    const GroupModel& g = *torus.owner;
    const FieldTower& t = g.tower();
    for (int code : h.elements())
        if (!g.contains(code)) throw Error("h is not a subgroup of the torus owner");

    std::vector<int> pts;
    for (int code : torus.points)
        if (h.contains(code)) pts.push_back(code);

    TorusDatum sub;
    sub.kind = torus.kind;
    sub.owner = &h;
    index_points(sub);
    sub.points = pts;

    if (pts.size() == torus.points.size()) {
        // Determinant subgroup is everything; the torus is unchanged.
        sub.pair_param = torus.pair_param;
        sub.generator = torus.generator;
        sub.cyc_order = torus.cyc_order;
        sub.weyl_mult = torus.weyl_mult;
        sub.weyl_swap = torus.weyl_swap;
        sub.split_rank = torus.split_rank;
        for (int code : pts)
            set_param(sub, code, torus.par1_by_code[code], torus.par2_by_code[code]);
        sub.weyl_rep = h.contains(torus.weyl_rep) ? torus.weyl_rep
                                                  : find_weyl_rep(sub, h);
        return sub;
    }

    if (!torus.pair_param) {
        // Cyclic subgroup of a cyclic torus.
        const long n = static_cast<long>(pts.size());
        const long step = torus.cyc_order / n;
        if (step * n != torus.cyc_order)
            throw Error("intersection size does not divide the torus order");
        sub.cyc_order = n;
        sub.weyl_mult = torus.weyl_mult % n;
        sub.split_rank = torus.split_rank - 1;
        sub.generator = -1;
        for (int code : pts) {
            const long a = torus.par1_by_code[code];
            if (a % step != 0) throw Error("intersection is not the cyclic subgroup");
            set_param(sub, code, static_cast<int>(a / step), 0);
            if (a == step) sub.generator = code;
        }
        if (n == 1) sub.generator = pts.at(0);
        if (sub.generator < 0) throw Error("cyclic generator missing from intersection");
    } else if (h.det_order() == 1) {
        // Split torus meeting SL2: diag(a, a^-1), cyclic of order q-1.
        sub.cyc_order = t.q() - 1;
        sub.weyl_mult = sub.cyc_order - 1;
        sub.split_rank = torus.split_rank - 1;
        const int g1 = t.gamma1();
        sub.generator = encode_mat(t, {g1, 0, 0, t.inv(g1)});
        for (int code : pts) {
            const Mat2 m = decode_mat(t, code);
            set_param(sub, code, t.dlog1(m.a), 0);
        }
        if (static_cast<long>(pts.size()) != sub.cyc_order)
            throw Error("split-torus intersection with SL2 has the wrong size");
    } else {
        // Intermediate determinant subgroup: keep the inherited pair
        // parametrization (the intersection is not cyclic in general).
        sub.pair_param = true;
        sub.weyl_swap = true;
        sub.split_rank = torus.split_rank - 1;
        for (int code : pts)
            set_param(sub, code, torus.par1_by_code[code], torus.par2_by_code[code]);
    }

    sub.weyl_rep = find_weyl_rep(sub, h);
    return sub;
}

TorusDatum conjugate_torus(const TorusDatum& torus, const Mat2& g) {
    const GroupModel& grp = *torus.owner;
    const FieldTower& t = grp.tower();
    if (!grp.contains(encode_mat(t, g)))
        throw Error("conjugating element is not in the group");

    TorusDatum out;
    out.kind = torus.kind;
    out.owner = torus.owner;
    out.pair_param = torus.pair_param;
    out.cyc_order = torus.cyc_order;
    out.weyl_mult = torus.weyl_mult;
    out.weyl_swap = torus.weyl_swap;
    out.split_rank = torus.split_rank;
    index_points(out);
    for (int code : torus.points) {
        const int image = encode_mat(t, mat_conj(t, g, decode_mat(t, code)));
        out.points.push_back(image);
        set_param(out, image, torus.par1_by_code[code], torus.par2_by_code[code]);
    }
    std::sort(out.points.begin(), out.points.end());
    if (torus.generator >= 0)
        out.generator = encode_mat(t, mat_conj(t, g, decode_mat(t, torus.generator)));
    out.weyl_rep = encode_mat(t, mat_conj(t, g, decode_mat(t, torus.weyl_rep)));
    return out;
}

TorusCharacter make_character(const TorusDatum& torus, long j1, long j2) {
    const long n = torus.pair_param
                       ? torus.owner->tower().q() - 1
                       : torus.cyc_order;
    j1 = ((j1 % n) + n) % n;
    j2 = ((j2 % n) + n) % n;
    return {&torus, j1, j2};
}

RootOfUnity evaluate(const TorusCharacter& theta, int point_code) {
    const TorusDatum& torus = *theta.owner;
    const auto [a, b] = torus.param(point_code);
    if (torus.pair_param) {
        const long n = torus.owner->tower().q() - 1;
        return RootOfUnity::make(theta.j1 * a + theta.j2 * b, n);
    }
    return RootOfUnity::make(theta.j1 * a, torus.cyc_order);
}

TorusCharacter restrict_character(const TorusCharacter& theta, const TorusDatum& sub) {
    const TorusDatum& torus = *theta.owner;
    for (int code : sub.points)
        if (!torus.contains(code))
            throw Error("subtorus was not obtained from the character's torus");
    if (sub.pair_param) return {&sub, theta.j1, theta.j2};

    const RootOfUnity at_gen = evaluate(theta, sub.generator);
    const long scaled = at_gen.num * sub.cyc_order;
    if (scaled % at_gen.den != 0)
        throw Error("restricted character is not well-defined on the subtorus");
    return make_character(sub, scaled / at_gen.den);
}

bool is_regular(const TorusCharacter& theta) {
    const TorusDatum& torus = *theta.owner;
    if (torus.pair_param) {
        const long n = torus.owner->tower().q() - 1;
        return (theta.j1 - theta.j2) % n != 0;
    }
    return ((theta.j1 * torus.weyl_mult - theta.j1) % torus.cyc_order) != 0;
}

std::vector<int> torus_normalizer(const TorusDatum& torus, const GroupModel& g) {
    const FieldTower& t = g.tower();
    std::vector<Mat2> gens;
    if (torus.pair_param) {
        gens.push_back({t.gamma1(), 0, 0, 1});
        gens.push_back({1, 0, 0, t.gamma1()});
    } else {
        gens.push_back(decode_mat(t, torus.generator));
    }
    std::vector<int> out;
    for (int code : g.elements()) {
        const Mat2 w = decode_mat(t, code);
        bool ok = true;
        for (const Mat2& gen : gens)
            if (!torus.contains(encode_mat(t, mat_conj(t, w, gen)))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(code);
    }
    return out;
}

bool is_regular_in_ambient(const TorusCharacter& theta_h,
                           const TorusDatum& ambient_torus,
                           const GroupModel& ambient) {
    const TorusDatum& torus_h = *theta_h.owner;
    const FieldTower& t = ambient.tower();
    for (int code : torus_h.points)
        if (!ambient_torus.contains(code))
            throw Error("theta_h does not live on a subtorus of the ambient torus");

    for (int wcode : torus_normalizer(ambient_torus, ambient)) {
        if (ambient_torus.contains(wcode)) continue;  // acts trivially on characters
        const Mat2 w = decode_mat(t, wcode);
        bool fixes = true;
        for (int code : torus_h.points) {
            const int image = encode_mat(t, mat_conj(t, w, decode_mat(t, code)));
            if (!torus_h.contains(image))
                throw Error("normalizer does not stabilize the subtorus");
            if (!(evaluate(theta_h, image) == evaluate(theta_h, code))) {
                fixes = false;
                break;
            }
        }
        if (fixes) return false;
    }
    return true;
}

}  // namespace dl2
