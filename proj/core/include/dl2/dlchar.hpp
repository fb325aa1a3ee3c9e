#pragma once

#include <map>
#include <memory>

#include "dl2/classfn.hpp"
#include "dl2/torus.hpp"

namespace dl2 {

enum class CentralizerClass { full_group, maximal_torus };

/// Lookup key for a Green function value: which connected centralizer the
/// value lives in, the torus class, and the unipotent class (a class index of
/// the table's group; class 0 is the identity). Deliberately general so a
/// provider for bigger groups can plug in.
struct GreenKey {
    CentralizerClass cent = CentralizerClass::full_group;
    TorusKind torus = TorusKind::split;
    int unip_class = 0;
    friend auto operator<=>(const GreenKey&, const GreenKey&) = default;
};

/// Integer Green function values for a GL2 or SL2 model. Built from the
/// rank-<=1 closed forms and self-validated on construction: the table is
/// only handed out once the induced theta = 1 characters reproduce the right
/// degrees and orthogonality integers, otherwise construction throws.
class GreenTable {
public:
    static GreenTable build(const GroupModel& g);
    /// Closed forms without the validation pass (cache / internal use).
    static GreenTable build_unvalidated(const GroupModel& g);

    long value(const GreenKey& key) const;
    const std::map<GreenKey, long>& entries() const { return entries_; }
    /// Class indices of the unipotent classes, identity first.
    const std::vector<int>& unipotent_classes() const { return unip_classes_; }
    const GroupModel& group() const { return *group_; }

private:
    const GroupModel* group_ = nullptr;
    std::map<GreenKey, long> entries_;
    std::vector<int> unip_classes_;
};

/// Evaluator for the Green-function formula: for g = su = us,
///   R(g) = |C(s)^Fr|^-1 * sum over x in G^Fr with x^-1 s x in T^Fr of
///          theta(x^-1 s x) * Q^{C(s)}_{x T x^-1}(u),
/// with the Green lookup dispatched on the centralizer type (whole group for
/// central s, the torus itself for regular semisimple s). The conjugation
/// fibers are memoized per class, so sweeping many theta is cheap.
class DlEvaluator {
public:
    DlEvaluator(const GroupModel& g, const TorusDatum& torus, const GreenTable& table);

    ClassFunction character(const TorusCharacter& theta) const;
    const TorusDatum& torus() const { return *torus_; }
    const GroupModel& group() const { return *group_; }

private:
    struct ClassData {
        bool central = false;
        int s_point = -1;              // torus point equal to s (central case)
        int unip_class = 0;            // class of u (central case)
        std::vector<long> fiber;       // counts per torus point (regular case)
        long centralizer_order = 0;    // |C(s)^Fr| (regular case)
    };

    const GroupModel* group_;
    const TorusDatum* torus_;
    const GreenTable* table_;
    std::vector<ClassData> class_data_;
};

/// One-shot evaluation (builds a validated table and an evaluator).
ClassFunction dl_character(const GroupModel& g, const TorusDatum& torus,
                           const TorusCharacter& theta);

/// (-1)^(split rank of the group - split rank of the torus).
int eps_sign(const GroupModel& g, const TorusDatum& torus);

/// eps * R for a regular character of the nonsplit torus; checks that the
/// result is irreducible of positive degree. Throws for non-regular theta.
ClassFunction cuspidal_character(const DlEvaluator& eval, const TorusCharacter& theta);
ClassFunction cuspidal_character(const GroupModel& g, const TorusDatum& nonsplit_torus,
                                 const TorusCharacter& theta);

/// Independent split-torus oracle: Frobenius induction of theta (inflated
/// through the Borel's diagonal part) from the upper-triangular subgroup.
/// Shares no code with the Green-function evaluator.
ClassFunction borel_induction(const GroupModel& g, const TorusCharacter& theta_split);

}  // namespace dl2
