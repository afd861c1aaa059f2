#include "pragval/argument.hpp"

#include <algorithm>

namespace pragval {

const char* label_name(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft: return "AndE_Left";
        case StepLabel::AndERight: return "AndE_Right";
        case StepLabel::ImpE: return "ImpE";
        case StepLabel::OrE: return "OrE";
        case StepLabel::BotE: return "BotE";
        case StepLabel::AndI: return "AndI";
        case StepLabel::OrILeft: return "OrI_Left";
        case StepLabel::OrIRight: return "OrI_Right";
        case StepLabel::ImpI: return "ImpI";
        case StepLabel::Unjustified: return "Unjustified";
    }
    return "?";
}

std::optional<StepLabel> label_from_name(const std::string& name) {
    static const std::pair<const char*, StepLabel> table[] = {
        {"AndE_Left", StepLabel::AndELeft},   {"AndE_Right", StepLabel::AndERight},
        {"ImpE", StepLabel::ImpE},            {"OrE", StepLabel::OrE},
        {"BotE", StepLabel::BotE},            {"AndI", StepLabel::AndI},
        {"OrI_Left", StepLabel::OrILeft},     {"OrI_Right", StepLabel::OrIRight},
        {"ImpI", StepLabel::ImpI},            {"Unjustified", StepLabel::Unjustified},
    };
    for (const auto& [n, l] : table)
        if (name == n) return l;
    return std::nullopt;
}

bool is_elimination(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft:
        case StepLabel::AndERight:
        case StepLabel::ImpE:
        case StepLabel::OrE:
        case StepLabel::BotE:
            return true;
        default:
            return false;
    }
}

bool is_introduction(StepLabel label) {
    switch (label) {
        case StepLabel::AndI:
        case StepLabel::OrILeft:
        case StepLabel::OrIRight:
        case StepLabel::ImpI:
            return true;
        default:
            return false;
    }
}

std::optional<int> major_position(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft:
        case StepLabel::AndERight:
        case StepLabel::BotE:
        case StepLabel::OrE:
            return 0;
        case StepLabel::ImpE:
            return 1;
        default:
            return std::nullopt;
    }
}

bool is_horizontal_minor_position(StepLabel label, int index) {
    return label == StepLabel::ImpE && index == 0;
}

bool is_vertical_minor_position(StepLabel label, int index) {
    return label == StepLabel::OrE && (index == 1 || index == 2);
}

std::optional<int> label_arity(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft:
        case StepLabel::AndERight:
        case StepLabel::BotE:
        case StepLabel::OrILeft:
        case StepLabel::OrIRight:
        case StepLabel::ImpI:
            return 1;
        case StepLabel::ImpE:
        case StepLabel::AndI:
            return 2;
        case StepLabel::OrE:
            return 3;
        case StepLabel::Unjustified:
            return std::nullopt;
    }
    return std::nullopt;
}

std::string occ_to_string(const OccPath& occ) {
    if (occ.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < occ.size(); i++) {
        if (i) out += '.';
        out += std::to_string(occ[i]);
    }
    return out;
}

ArgumentTree::ArgumentTree(FormulaPtr conclusion, std::optional<StepLabel> label,
                           std::vector<ArgPtr> premisses, std::optional<std::string> tag)
    : conclusion_(std::move(conclusion)),
      label_(label),
      premisses_(std::move(premisses)),
      tag_(std::move(tag)) {
    node_count_ = 1;
    for (const auto& p : premisses_) node_count_ += p->node_count();
}

ArgPtr ArgumentTree::leaf(FormulaPtr formula, std::optional<std::string> tag) {
    if (!formula) throw InvalidArgumentTree("leaf requires a formula");
    return ArgPtr(new ArgumentTree(std::move(formula), std::nullopt, {}, std::move(tag)));
}

ArgPtr ArgumentTree::step(StepLabel label, FormulaPtr conclusion, std::vector<ArgPtr> premisses,
                          std::optional<std::string> discharge_tag) {
    if (!conclusion) throw InvalidArgumentTree("step requires a conclusion");
    if (premisses.empty())
        throw InvalidArgumentTree("inference step requires at least one premiss");
    for (const auto& p : premisses)
        if (!p) throw InvalidArgumentTree("null premiss");
    if (auto arity = label_arity(label); arity && static_cast<int>(premisses.size()) != *arity)
        throw InvalidArgumentTree(std::string(label_name(label)) + " takes " +
                                  std::to_string(*arity) + " premisses, got " +
                                  std::to_string(premisses.size()));
    return ArgPtr(
        new ArgumentTree(std::move(conclusion), label, std::move(premisses), std::move(discharge_tag)));
}

StepLabel ArgumentTree::label() const {
    if (!label_) throw InvalidArgumentTree("leaf has no step label");
    return *label_;
}

const ArgumentTree& node_at(const ArgPtr& root, const OccPath& occ) {
    const ArgumentTree* node = root.get();
    for (int idx : occ) {
        if (idx < 0 || idx >= static_cast<int>(node->premisses().size()))
            throw InvalidArgumentTree("invalid occurrence reference " + occ_to_string(occ));
        node = node->premisses()[idx].get();
    }
    return *node;
}

ArgPtr subtree_at(const ArgPtr& root, const OccPath& occ) {
    ArgPtr node = root;
    for (int idx : occ) {
        if (idx < 0 || idx >= static_cast<int>(node->premisses().size()))
            throw InvalidArgumentTree("invalid occurrence reference " + occ_to_string(occ));
        node = node->premisses()[idx];
    }
    return node;
}

ArgPtr replace_at(const ArgPtr& root, const OccPath& occ, const ArgPtr& replacement) {
    if (occ.empty()) return replacement;
    int idx = occ.front();
    if (idx < 0 || idx >= static_cast<int>(root->premisses().size()))
        throw InvalidArgumentTree("invalid occurrence reference " + occ_to_string(occ));
    std::vector<ArgPtr> prem = root->premisses();
    prem[idx] = replace_at(prem[idx], OccPath(occ.begin() + 1, occ.end()), replacement);
    if (root->is_leaf()) throw InvalidArgumentTree("cannot descend below a leaf");
    return ArgumentTree::step(root->label(), root->conclusion(), std::move(prem), root->tag());
}

namespace {

void visit(const ArgPtr& node, OccPath& occ,
           const std::function<void(const OccPath&, const ArgumentTree&)>& fn) {
    fn(occ, *node);
    for (int i = 0; i < static_cast<int>(node->premisses().size()); i++) {
        occ.push_back(i);
        visit(node->premisses()[i], occ, fn);
        occ.pop_back();
    }
}

// Steps on the root path of occ (strict ancestors, nearest first) carrying
// the given tag.
std::vector<OccPath> binders_on_path(const ArgPtr& root, const OccPath& occ,
                                     const std::string& tag) {
    std::vector<OccPath> found;
    OccPath prefix;
    const ArgumentTree* node = root.get();
    for (int idx : occ) {
        if (!node->is_leaf() && node->tag() && *node->tag() == tag) found.push_back(prefix);
        prefix.push_back(idx);
        node = node->premisses()[idx].get();
    }
    std::reverse(found.begin(), found.end());
    return found;
}

}  // namespace

void for_each_occurrence(const ArgPtr& root,
                         const std::function<void(const OccPath&, const ArgumentTree&)>& fn) {
    OccPath occ;
    visit(root, occ, fn);
}

std::map<OccPath, OccPath> resolve_binders(const ArgPtr& arg) {
    std::map<OccPath, OccPath> out;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (!node.is_leaf() || !node.tag()) return;
        auto binders = binders_on_path(arg, occ, *node.tag());
        if (binders.size() > 1)
            throw InvalidArgumentTree("tag '" + *node.tag() + "' on leaf " + occ_to_string(occ) +
                                      " has multiple binders on its path");
        if (binders.size() == 1) out[occ] = binders.front();
    });
    return out;
}

bool leaf_is_open(const ArgPtr& root, const OccPath& leaf_occ) {
    const ArgumentTree& node = node_at(root, leaf_occ);
    if (!node.is_leaf()) throw InvalidArgumentTree("not a leaf: " + occ_to_string(leaf_occ));
    if (!node.tag()) return true;
    auto binders = binders_on_path(root, leaf_occ, *node.tag());
    if (binders.size() > 1)
        throw InvalidArgumentTree("ambiguous binder for leaf " + occ_to_string(leaf_occ));
    return binders.empty();
}

std::vector<std::string> validate(const ArgPtr& arg) {
    std::vector<std::string> violations;

    // Leaf tags bind to exactly one step on the path; collect bindings.
    std::map<OccPath, std::vector<OccPath>> bound_by_binder;  // binder -> leaves
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (!node.is_leaf() || !node.tag()) return;
        auto binders = binders_on_path(arg, occ, *node.tag());
        if (binders.empty())
            violations.push_back("leaf " + occ_to_string(occ) + " tag '" + *node.tag() +
                                 "' binds to no step on its path");
        else if (binders.size() > 1)
            violations.push_back("leaf " + occ_to_string(occ) + " tag '" + *node.tag() +
                                 "' binds to multiple steps on its path");
        else
            bound_by_binder[binders.front()].push_back(occ);
    });

    // OrE steps must discharge non-vacuously in each vertical and nowhere else.
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (node.is_leaf() || node.label() != StepLabel::OrE) return;
        if (!node.tag()) {
            violations.push_back("OrE step " + occ_to_string(occ) + " carries no discharge tag");
            return;
        }
        const FormulaPtr& major = node.premisses()[0]->conclusion();
        bool major_is_disj = major->kind() == FormulaKind::Disjunction;
        bool used_left = false, used_right = false;
        auto it = bound_by_binder.find(occ);
        if (it != bound_by_binder.end()) {
            for (const OccPath& leaf : it->second) {
                int branch = leaf[occ.size()];
                const FormulaPtr& lf = node_at(arg, leaf).conclusion();
                if (branch == 0) {
                    violations.push_back("OrE step " + occ_to_string(occ) +
                                         " discharges a leaf inside its major premiss");
                } else if (branch == 1) {
                    used_left = true;
                    if (major_is_disj && !equal(lf, major->left()))
                        violations.push_back("OrE step " + occ_to_string(occ) +
                                             " discharges " + to_string(lf) +
                                             " in its left vertical, expected " +
                                             to_string(major->left()));
                } else {
                    used_right = true;
                    if (major_is_disj && !equal(lf, major->right()))
                        violations.push_back("OrE step " + occ_to_string(occ) +
                                             " discharges " + to_string(lf) +
                                             " in its right vertical, expected " +
                                             to_string(major->right()));
                }
            }
        }
        if (!used_left)
            violations.push_back("OrE step " + occ_to_string(occ) +
                                 " discharges nothing in its left vertical");
        if (!used_right)
            violations.push_back("OrE step " + occ_to_string(occ) +
                                 " discharges nothing in its right vertical");
    });

    return violations;
}

FormulaMultiset open_assumptions(const ArgPtr& arg) {
    FormulaMultiset out;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (node.is_leaf() && leaf_is_open(arg, occ)) out.insert(node.conclusion());
    });
    return out;
}

FormulaSet assumption_set(const ArgPtr& arg) {
    FormulaSet out;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (node.is_leaf() && leaf_is_open(arg, occ)) out.insert(node.conclusion());
    });
    return out;
}

int degree_of_argument(const ArgPtr& arg) {
    int deg = arg->conclusion()->degree();
    for (const auto& f : assumption_set(arg)) deg = std::max(deg, f->degree());
    // Multiplicity does not matter for the max, but discharged duplicates of
    // an open formula must not be missed; assumption_set already folds them.
    return deg;
}

bool is_principal(const ArgPtr& arg, const OccPath& occ) {
    node_at(arg, occ);  // bounds check, throws on bad occurrence
    if (occ.empty()) return false;
    OccPath cur = occ;
    while (!cur.empty()) {
        int idx = cur.back();
        cur.pop_back();
        const ArgumentTree& parent = node_at(arg, cur);
        if (!is_elimination(parent.label())) return false;
        if (major_position(parent.label()) != idx) return false;
    }
    return true;
}

bool is_placid(const ArgPtr& arg, const OccPath& occ) {
    node_at(arg, occ);
    OccPath cur = occ;
    while (!cur.empty()) {
        int idx = cur.back();
        cur.pop_back();
        const ArgumentTree& parent = node_at(arg, cur);
        if (is_horizontal_minor_position(parent.label(), idx)) return false;
    }
    return true;
}

std::optional<Path> principal_path(const ArgPtr& arg) {
    if (arg->is_leaf()) return Path{OccPath{}};  // degenerate single occurrence
    // Walk the major spine upward from the conclusion; there is at most one
    // candidate principal assumption, the top of that spine.
    OccPath cur;
    Path chain{cur};
    const ArgumentTree* node = arg.get();
    while (!node->is_leaf()) {
        auto major = major_position(node->label());
        if (!is_elimination(node->label()) || !major) return std::nullopt;
        cur.push_back(*major);
        chain.push_back(cur);
        node = node->premisses()[*major].get();
    }
    if (!leaf_is_open(arg, cur)) return std::nullopt;
    std::reverse(chain.begin(), chain.end());
    return chain;
}

bool is_proper(const ArgPtr& arg) { return principal_path(arg).has_value(); }

bool is_canonical(const ArgPtr& arg) {
    if (!is_proper(arg)) return false;
    bool ok = true;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree&) {
        if (!ok || occ.empty()) return;
        OccPath parent(occ.begin(), occ.end() - 1);
        StepLabel plabel = node_at(arg, parent).label();
        if (!is_vertical_minor_position(plabel, occ.back())) return;
        if (is_placid(arg, occ) && !is_proper(subtree_at(arg, occ))) ok = false;
    });
    return ok;
}

std::vector<OccPath> critical_subarguments(const ArgPtr& arg) {
    std::vector<OccPath> candidates;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree&) {
        if (occ.empty()) return;
        OccPath parent(occ.begin(), occ.end() - 1);
        StepLabel plabel = node_at(arg, parent).label();
        if (!is_horizontal_minor_position(plabel, occ.back())) return;
        if (!is_canonical(subtree_at(arg, occ))) candidates.push_back(occ);
    });
    // Keep only maximal ones (no strict prefix also in the set).
    std::sort(candidates.begin(), candidates.end());
    std::vector<OccPath> maximal;
    for (const auto& occ : candidates) {
        bool contained = false;
        for (const auto& kept : maximal) {
            if (kept.size() < occ.size() && std::equal(kept.begin(), kept.end(), occ.begin())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(occ);
    }
    return maximal;
}

ProperPart proper_part(const ArgPtr& arg) {
    if (!is_canonical(arg))
        throw InvalidArgumentTree("proper_part requires a canonical argument");
    ProperPart out;
    out.holes = critical_subarguments(arg);
    out.skeleton = arg;
    for (const auto& occ : out.holes) {
        const ArgumentTree& sub = node_at(arg, occ);
        out.skeleton = replace_at(out.skeleton, occ, ArgumentTree::leaf(sub.conclusion()));
    }
    for_each_occurrence(out.skeleton, [&](const OccPath& occ, const ArgumentTree& node) {
        if (!node.is_leaf()) return;
        if (std::find(out.holes.begin(), out.holes.end(), occ) != out.holes.end()) return;
        if (leaf_is_open(out.skeleton, occ)) out.proper_assumptions.push_back(occ);
    });
    return out;
}

namespace {

ArgPtr strip_dangling(const ArgPtr& root, const ArgPtr& node, OccPath& occ) {
    if (node->is_leaf()) {
        if (node->tag() && binders_on_path(root, occ, *node->tag()).empty())
            return ArgumentTree::leaf(node->conclusion());
        return node;
    }
    std::vector<ArgPtr> prem;
    prem.reserve(node->premisses().size());
    bool changed = false;
    for (int i = 0; i < static_cast<int>(node->premisses().size()); i++) {
        occ.push_back(i);
        ArgPtr p = strip_dangling(root, node->premisses()[i], occ);
        occ.pop_back();
        changed |= (p != node->premisses()[i]);
        prem.push_back(std::move(p));
    }
    if (!changed) return node;
    return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), node->tag());
}

}  // namespace

ArgPtr subargument_standalone(const ArgPtr& root, const OccPath& occ) {
    ArgPtr sub = subtree_at(root, occ);
    OccPath rel;
    return strip_dangling(sub, sub, rel);
}

bool has_leaf_tagged(const ArgPtr& subtree, const std::string& tag) {
    if (subtree->is_leaf()) return subtree->tag() && *subtree->tag() == tag;
    if (subtree->tag() && *subtree->tag() == tag) return false;
    for (const auto& p : subtree->premisses())
        if (has_leaf_tagged(p, tag)) return true;
    return false;
}

bool trees_equal(const ArgPtr& a, const ArgPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() != b->is_leaf()) return false;
    if (!equal(a->conclusion(), b->conclusion())) return false;
    if (a->tag() != b->tag()) return false;
    if (a->is_leaf()) return true;
    if (a->label() != b->label()) return false;
    if (a->premisses().size() != b->premisses().size()) return false;
    for (std::size_t i = 0; i < a->premisses().size(); i++)
        if (!trees_equal(a->premisses()[i], b->premisses()[i])) return false;
    return true;
}

}  // namespace pragval
