#ifndef PRAGVAL_ARGUMENT_HPP
#define PRAGVAL_ARGUMENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pragval/formula.hpp"

namespace pragval {

// Inference step labels.  The elimination/introduction labels claim that a
// step instantiates the corresponding NJ rule (check_nj verifies the claim);
// Unjustified marks steps not claimed to instantiate any rule, as occur
// inside critical subarguments.
enum class StepLabel {
    AndELeft,
    AndERight,
    ImpE,
    OrE,
    BotE,
    AndI,
    OrILeft,
    OrIRight,
    ImpI,
    Unjustified,
};

const char* label_name(StepLabel label);
std::optional<StepLabel> label_from_name(const std::string& name);

bool is_elimination(StepLabel label);
bool is_introduction(StepLabel label);

// Premiss index of the major premiss, for eliminations.
// AndE*/BotE: 0 of 1; ImpE: 1 of [minor, major]; OrE: 0 of [major, left, right].
std::optional<int> major_position(StepLabel label);
bool is_horizontal_minor_position(StepLabel label, int index);  // ImpE index 0
bool is_vertical_minor_position(StepLabel label, int index);    // OrE index 1, 2

// Fixed premiss count per label; Unjustified allows any count >= 1.
std::optional<int> label_arity(StepLabel label);

class ArgumentTree;
using ArgPtr = std::shared_ptr<const ArgumentTree>;

// Occurrence reference: premiss indices from the root; {} is the conclusion.
using OccPath = std::vector<int>;
std::string occ_to_string(const OccPath& occ);

// A path of occurrences, each a premiss of the step concluding the next.
using Path = std::vector<OccPath>;

struct InvalidArgumentTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable tree of sentence occurrences.  A leaf is an assumption and may
// carry a tag binding it to a discharging step strictly below it; a step
// node carries a label, its premisses in rule order, and optionally a
// discharge tag.
class ArgumentTree {
public:
    static ArgPtr leaf(FormulaPtr formula, std::optional<std::string> tag = std::nullopt);
    static ArgPtr step(StepLabel label, FormulaPtr conclusion, std::vector<ArgPtr> premisses,
                       std::optional<std::string> discharge_tag = std::nullopt);

    bool is_leaf() const { return !label_.has_value(); }
    const FormulaPtr& conclusion() const { return conclusion_; }
    StepLabel label() const;
    const std::vector<ArgPtr>& premisses() const { return premisses_; }
    const std::optional<std::string>& tag() const { return tag_; }

    std::size_t node_count() const { return node_count_; }

private:
    ArgumentTree(FormulaPtr conclusion, std::optional<StepLabel> label,
                 std::vector<ArgPtr> premisses, std::optional<std::string> tag);

    FormulaPtr conclusion_;
    std::optional<StepLabel> label_;
    std::vector<ArgPtr> premisses_;
    std::optional<std::string> tag_;
    std::size_t node_count_;
};

const ArgumentTree& node_at(const ArgPtr& root, const OccPath& occ);
ArgPtr subtree_at(const ArgPtr& root, const OccPath& occ);

// Rebuild with the subtree at occ replaced (structure shared elsewhere).
ArgPtr replace_at(const ArgPtr& root, const OccPath& occ, const ArgPtr& replacement);

// Visit every occurrence, premisses before using their paths.
void for_each_occurrence(const ArgPtr& root,
                         const std::function<void(const OccPath&, const ArgumentTree&)>& fn);

// Well-formedness beyond construction-time arity checks:
//  - every tagged leaf binds to exactly one same-tagged step on its
//    root path;
//  - leaves bound to an OrE step lie in its vertical subtrees, each vertical
//    discharges at least one, and (when the major concludes a disjunction)
//    bound leaves carry the corresponding disjunct.
// Returns human-readable violations; empty means well-formed.
std::vector<std::string> validate(const ArgPtr& arg);

// Map from each bound leaf to its binder step.  Throws InvalidArgumentTree
// on ambiguous tags; dangling tags are simply absent (such leaves are open).
std::map<OccPath, OccPath> resolve_binders(const ArgPtr& arg);

bool leaf_is_open(const ArgPtr& root, const OccPath& leaf_occ);

// Undischarged leaf formulas, with multiplicity.
FormulaMultiset open_assumptions(const ArgPtr& arg);
FormulaSet assumption_set(const ArgPtr& arg);

// Max degree among open assumptions and the conclusion.
int degree_of_argument(const ArgPtr& arg);

// --- Structural classifiers -------------------------------------------------

// True iff occ and everything on its path down to the conclusion is the
// major premiss of an elimination step.  The root itself is no premiss and
// is never principal.
bool is_principal(const ArgPtr& arg, const OccPath& occ);

// True iff neither occ nor anything on its downward path is a horizontal
// minor premiss.
bool is_placid(const ArgPtr& arg, const OccPath& occ);

// Path from the principal open assumption to the conclusion (inclusive),
// absent when the argument is improper.  A single occurrence counts as
// proper with the degenerate one-element path.
std::optional<Path> principal_path(const ArgPtr& arg);

bool is_proper(const ArgPtr& arg);

// Proper, and the subargument of every placid vertical minor premiss is
// proper.
bool is_canonical(const ArgPtr& arg);

// Maximal subarguments that are non-canonical and conclude in a horizontal
// minor premiss, in lexicographic occurrence order.
std::vector<OccPath> critical_subarguments(const ArgPtr& arg);

// The argument with each critical subargument replaced by a placeholder
// leaf of its conclusion formula.  proper_assumptions lists the open
// assumption occurrences that remain (the principal assumption plus
// principal assumptions of proper subarguments).
struct ProperPart {
    ArgPtr skeleton;
    std::vector<OccPath> holes;
    std::vector<OccPath> proper_assumptions;
};
ProperPart proper_part(const ArgPtr& arg);  // requires is_canonical

// Subtree as a standalone argument: leaf tags bound outside the subtree are
// stripped, so those leaves count as open assumptions of the subargument.
ArgPtr subargument_standalone(const ArgPtr& root, const OccPath& occ);

bool trees_equal(const ArgPtr& a, const ArgPtr& b);

// True iff the subtree contains a leaf carrying the tag that is not
// shadowed by an inner binder with the same tag.
bool has_leaf_tagged(const ArgPtr& subtree, const std::string& tag);

}  // namespace pragval

#endif
