#include "dl2/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dl2 {

int encode_mat(const FieldTower& t, const Mat2& m) {
    const int q = t.q();
    return ((m.b * q + m.c) * q + m.a) * q + m.d;
}

Mat2 decode_mat(const FieldTower& t, int code) {
    const int q = t.q();
    Mat2 m;
    m.d = code % q;
    code /= q;
    m.a = code % q;
    code /= q;
    m.c = code % q;
    m.b = code / q;
    return m;
}

Mat2 mat_mul(const FieldTower& t, const Mat2& x, const Mat2& y) {
    return {t.add(t.mul(x.a, y.a), t.mul(x.b, y.c)),
            t.add(t.mul(x.a, y.b), t.mul(x.b, y.d)),
            t.add(t.mul(x.c, y.a), t.mul(x.d, y.c)),
            t.add(t.mul(x.c, y.b), t.mul(x.d, y.d))};
}

int mat_det(const FieldTower& t, const Mat2& x) {
    return t.sub(t.mul(x.a, x.d), t.mul(x.b, x.c));
}

Mat2 mat_inv(const FieldTower& t, const Mat2& x) {
    const int det = mat_det(t, x);
    if (det == 0) throw Error("matrix is singular");
    const int di = t.inv(det);
    return {t.mul(di, x.d), t.mul(di, t.neg(x.b)),
            t.mul(di, t.neg(x.c)), t.mul(di, x.a)};
}

Mat2 mat_conj(const FieldTower& t, const Mat2& g, const Mat2& x) {
    return mat_mul(t, mat_mul(t, g, x), mat_inv(t, g));
}

Mat2 mat_identity() { return {1, 0, 0, 1}; }
Mat2 mat_scalar(int a) { return {a, 0, 0, a}; }

bool GroupModel::contains(int code) const {
    return code >= 0 && code < static_cast<int>(elem_index_.size()) &&
           elem_index_[code] >= 0;
}

int GroupModel::element_index(int code) const {
    if (code < 0 || code >= static_cast<int>(elem_index_.size())) return -1;
    return elem_index_[code];
}

int GroupModel::class_of(int code) const {
    const int idx = element_index(code);
    if (idx < 0) throw Error("element is not in the group");
    if (elem_class_.empty()) throw Error("conjugacy classes not computed");
    return elem_class_[idx];
}

void GroupModel::adopt_classes(std::vector<ConjClass> classes,
                               std::vector<int> elem_class) {
    if (elem_class.size() != elements_.size())
        throw Error("class partition does not match the element list");
    long total = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
        const ConjClass& cc = classes[c];
        if (cc.size <= 0 || !contains(cc.rep)) throw Error("bad class representative");
        if (elem_class[elem_index_[cc.rep]] != static_cast<int>(c))
            throw Error("class representative not mapped to its class");
        total += cc.size;
    }
    if (total != order()) throw Error("class sizes do not sum to the group order");
    std::vector<long> counts(classes.size(), 0);
    for (int c : elem_class) {
        if (c < 0 || c >= static_cast<int>(classes.size()))
            throw Error("class index out of range");
        ++counts[c];
    }
    for (size_t c = 0; c < classes.size(); ++c)
        if (counts[c] != classes[c].size) throw Error("class size mismatch");
    classes_ = std::move(classes);
    elem_class_ = std::move(elem_class);
}

namespace {

// Transvections over an F_p-basis of F_q generate SL2(F_q); one diagonal
// matrix with the right determinant extends them to the determinant subgroup.
std::vector<Mat2> conjugation_generators(const FieldTower& t, int det_order) {
    std::vector<Mat2> gens;
    int basis_elt = 1;
    for (int i = 0; i < t.e(); ++i) {
        gens.push_back({1, basis_elt, 0, 1});
        gens.push_back({1, 0, basis_elt, 1});
        basis_elt = t.p() % t.q();  // code of the degree-2 basis element y
    }
    if (det_order > 1) {
        const int d = t.exp1((t.q() - 1) / det_order);
        gens.push_back({d, 0, 0, 1});
    }
    return gens;
}

}  // namespace

void GroupModel::ensure_classes() {
    if (!classes_.empty()) return;
    const FieldTower& t = *tower_;
    const auto gens = conjugation_generators(t, det_order_);
    std::vector<std::pair<Mat2, Mat2>> gen_pairs;
    gen_pairs.reserve(gens.size());
    for (const Mat2& g : gens) gen_pairs.emplace_back(g, mat_inv(t, g));

    classes_.clear();
    elem_class_.assign(elements_.size(), -1);
    std::deque<int> queue;
    for (size_t seed = 0; seed < elements_.size(); ++seed) {
        if (elem_class_[seed] != -1) continue;
        const int cls = static_cast<int>(classes_.size());
        long size = 0;
        elem_class_[seed] = cls;
        queue.clear();
        queue.push_back(static_cast<int>(seed));
        while (!queue.empty()) {
            const int idx = queue.front();
            queue.pop_front();
            ++size;
            const Mat2 x = decode_mat(t, elements_[idx]);
            for (const auto& [g, gi] : gen_pairs) {
                const Mat2 y = mat_mul(t, mat_mul(t, g, x), gi);
                const int yidx = elem_index_[encode_mat(t, y)];
                if (elem_class_[yidx] == -1) {
                    elem_class_[yidx] = cls;
                    queue.push_back(yidx);
                }
            }
        }
        classes_.push_back({elements_[seed], size});
    }
}

GroupModel build_group(const FieldTower& t, GroupKind kind, int det_order,
                       bool defer_classes) {
    const int q = t.q();
    if (kind == GroupKind::gl2) {
        det_order = q - 1;
    } else {
        if (det_order < 1 || (q - 1) % det_order != 0)
            throw Error("determinant subgroup order must divide q-1");
    }

    GroupModel g;
    g.tower_ = &t;
    g.kind_ = kind;
    g.det_order_ = det_order;
    g.split_rank_ = (kind == GroupKind::gl2) ? 2 : 1;

    // Membership of the determinant: D is generated by gamma1^((q-1)/|D|).
    std::vector<char> det_ok(q, 0);
    for (int k = 0; k < det_order; ++k)
        det_ok[t.exp1(static_cast<long>(k) * ((q - 1) / det_order))] = 1;

    const long budget = static_cast<long>(q * q - 1) * (q * q - q);
    if (budget > 14000) throw Error("group enumeration budget exceeded");

    const int code_bound = q * q * q * q;
    g.elem_index_.assign(code_bound, -1);
    for (int code = 0; code < code_bound; ++code) {
        const Mat2 m = decode_mat(t, code);
        const int det = mat_det(t, m);
        if (det == 0 || !det_ok[det]) continue;
        g.elem_index_[code] = static_cast<int>(g.elements_.size());
        g.elements_.push_back(code);
    }

    const long expected = (kind == GroupKind::gl2)
                              ? static_cast<long>(q * q - 1) * (q * q - q)
                              : static_cast<long>(det_order) * q * (q * q - 1);
    if (g.order() != expected) throw Error("group order mismatch after enumeration");

    if (!defer_classes) g.ensure_classes();
    return g;
}

long element_order(const GroupModel& g, const Mat2& x) {
    const FieldTower& t = g.tower();
    const Mat2 id = mat_identity();
    Mat2 acc = x;
    long ord = 1;
    while (!(acc == id)) {
        acc = mat_mul(t, acc, x);
        ++ord;
        if (ord > g.order()) throw Error("element order exceeds group order");
    }
    return ord;
}

bool is_semisimple(const GroupModel& g, const Mat2& x) {
    return element_order(g, x) % g.tower().p() != 0;
}

bool is_unipotent(const GroupModel& g, const Mat2& x) {
    long ord = element_order(g, x);
    const int p = g.tower().p();
    while (ord % p == 0) ord /= p;
    return ord == 1;
}

bool is_central(const Mat2& x) { return x.b == 0 && x.c == 0 && x.a == x.d; }

namespace {

long mod_inverse(long a, long n) {
    long t0 = 0, t1 = 1, r0 = n, r1 = a % n;
    while (r1 != 0) {
        const long qt = r0 / r1;
        t0 = std::exchange(t1, t0 - qt * t1);
        r0 = std::exchange(r1, r0 - qt * r1);
    }
    if (r0 != 1) throw Error("not invertible in Z/n");
    return ((t0 % n) + n) % n;
}

Mat2 mat_pow(const FieldTower& t, Mat2 x, long k) {
    Mat2 acc = mat_identity();
    while (k > 0) {
        if (k & 1) acc = mat_mul(t, acc, x);
        x = mat_mul(t, x, x);
        k >>= 1;
    }
    return acc;
}

}  // namespace

std::pair<Mat2, Mat2> jordan_decompose(const GroupModel& g, const Mat2& x) {
    if (!g.contains(encode_mat(g.tower(), x)))
        throw Error("element is not in the group");
    const FieldTower& t = g.tower();
    const int p = t.p();
    const long n = element_order(g, x);
    long pa = 1, m = n;
    while (m % p == 0) {
        m /= p;
        pa *= p;
    }
    // alpha = 0 mod p^a, alpha = 1 mod m
    long alpha;
    if (m == 1)
        alpha = 0;
    else if (pa == 1)
        alpha = 1;
    else
        alpha = (mod_inverse(pa % m, m) * pa) % n;
    const Mat2 s = mat_pow(t, x, alpha);
    const Mat2 u = mat_mul(t, x, mat_inv(t, s));
    return {s, u};
}

std::vector<int> centralizer(const GroupModel& g, const Mat2& s) {
    if (!is_semisimple(g, s)) throw Error("centralizer requires a semisimple element");
    const FieldTower& t = g.tower();
    std::vector<int> out;
    for (int code : g.elements()) {
        const Mat2 x = decode_mat(t, code);
        if (mat_mul(t, x, s) == mat_mul(t, s, x)) out.push_back(code);
    }
    return out;
}

}  // namespace dl2
