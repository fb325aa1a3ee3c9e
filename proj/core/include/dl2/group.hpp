#pragma once

#include <utility>
#include <vector>

#include "dl2/ffield.hpp"

namespace dl2 {

/// 2x2 matrix [[a,b],[c,d]] over F_q, entries as field codes.
struct Mat2 {
    int a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Canonical element code: base-q digits in the order (b, c, a, d), most
/// significant first. Diagonal matrices come first and the identity is the
/// smallest invertible code, so deterministic class lists start with the
/// identity class.
int encode_mat(const FieldTower& t, const Mat2& m);
Mat2 decode_mat(const FieldTower& t, int code);

Mat2 mat_mul(const FieldTower& t, const Mat2& x, const Mat2& y);
Mat2 mat_inv(const FieldTower& t, const Mat2& x);
Mat2 mat_conj(const FieldTower& t, const Mat2& g, const Mat2& x);  // g x g^-1
int mat_det(const FieldTower& t, const Mat2& x);
Mat2 mat_identity();
Mat2 mat_scalar(int a);

enum class GroupKind { gl2, det_subgroup };

struct ConjClass {
    int rep = -1;   // smallest element code in the class
    long size = 0;
};

/// Fully enumerated finite matrix group: GL2(F_q) or the subgroup with
/// determinant in D, the unique subgroup of F_q^x of a given order
/// (order 1 = SL2). Immutable after construction.
class GroupModel {
public:
    const FieldTower& tower() const { return *tower_; }
    GroupKind kind() const { return kind_; }
    long order() const { return static_cast<long>(elements_.size()); }
    /// |D|; equals q-1 for the GL2 kind.
    int det_order() const { return det_order_; }
    /// F_q-split rank of the corresponding algebraic group (GL2: 2, SL2: 1).
    int split_rank() const { return split_rank_; }

    const std::vector<int>& elements() const { return elements_; }
    const std::vector<ConjClass>& classes() const { return classes_; }

    bool contains(int code) const;
    /// Index into elements(), or -1.
    int element_index(int code) const;
    /// Class index of an element code; the element must belong to the group.
    int class_of(int code) const;
    Mat2 element(int idx) const { return decode_mat(*tower_, elements_[idx]); }

    /// Adopts a precomputed class partition (cache load path). Throws if the
    /// partition is inconsistent with the element list.
    void adopt_classes(std::vector<ConjClass> classes, std::vector<int> elem_class);
    const std::vector<int>& elem_class_raw() const { return elem_class_; }

    /// Computes the class partition if it was deferred and not adopted.
    void ensure_classes();

    friend GroupModel build_group(const FieldTower& t, GroupKind kind, int det_order,
                                  bool defer_classes);

private:
    GroupModel() = default;

    const FieldTower* tower_ = nullptr;
    GroupKind kind_ = GroupKind::gl2;
    int det_order_ = 0;
    int split_rank_ = 0;
    std::vector<int> elements_;    // codes, ascending
    std::vector<int> elem_index_;  // code -> index, -1 outside
    std::vector<ConjClass> classes_;
    std::vector<int> elem_class_;  // element index -> class index
};

/// Enumerates the group and its conjugacy classes. det_order is ignored for
/// the GL2 kind; it must divide q-1 for a determinant subgroup. Set
/// defer_classes when a cached partition will be adopted right after.
GroupModel build_group(const FieldTower& t, GroupKind kind, int det_order = 0,
                       bool defer_classes = false);

inline GroupModel build_gl2(const FieldTower& t) {
    return build_group(t, GroupKind::gl2);
}
inline GroupModel build_sl2(const FieldTower& t) {
    return build_group(t, GroupKind::det_subgroup, 1);
}

long element_order(const GroupModel& g, const Mat2& x);
/// Order coprime to p.
bool is_semisimple(const GroupModel& g, const Mat2& x);
/// Order a power of p.
bool is_unipotent(const GroupModel& g, const Mat2& x);
bool is_central(const Mat2& x);

/// Jordan parts (s, u) with s semisimple, u unipotent, su = us = x; both are
/// powers of x, obtained by CRT on the exponent.
std::pair<Mat2, Mat2> jordan_decompose(const GroupModel& g, const Mat2& x);

/// Full centralizer of a semisimple element, as element codes. For GL2 and
/// SL2 semisimple centralizers are connected, so this set is also the
/// Frobenius-fixed part of the connected centralizer.
std::vector<int> centralizer(const GroupModel& g, const Mat2& s);

}  // namespace dl2
