#include "pragval/ndcalc.hpp"

#include <algorithm>

namespace pragval {

namespace {

void add(std::vector<NjViolation>& out, const OccPath& occ, std::string msg) {
    out.push_back(NjViolation{occ, std::move(msg)});
}

}  // namespace

std::vector<NjViolation> check_nj(const ArgPtr& arg) {
    std::vector<NjViolation> out;
    for (const auto& msg : validate(arg)) add(out, {}, msg);
    if (!out.empty()) {
        // Binder resolution below assumes sane discharge structure.
        bool fatal = false;
        for (const auto& v : out)
            if (v.message.find("multiple steps") != std::string::npos) fatal = true;
        if (fatal) return out;
    }

    std::map<OccPath, OccPath> binders = resolve_binders(arg);

    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree& node) {
        if (node.is_leaf()) return;
        const auto& prem = node.premisses();
        const FormulaPtr& concl = node.conclusion();
        switch (node.label()) {
            case StepLabel::Unjustified:
                add(out, occ, "Unjustified step is not an NJ rule");
                break;
            case StepLabel::AndELeft:
            case StepLabel::AndERight: {
                const FormulaPtr& major = prem[0]->conclusion();
                if (major->kind() != FormulaKind::Conjunction)
                    add(out, occ, "AndE major premiss " + to_string(major) + " is not a conjunction");
                else {
                    const FormulaPtr& want =
                        node.label() == StepLabel::AndELeft ? major->left() : major->right();
                    if (!equal(want, concl))
                        add(out, occ, "AndE consequence " + to_string(concl) + " does not match " +
                                          to_string(want));
                }
                break;
            }
            case StepLabel::ImpE: {
                const FormulaPtr& major = prem[1]->conclusion();
                if (major->kind() != FormulaKind::Implication) {
                    add(out, occ, "ImpE major premiss " + to_string(major) + " is not an implication");
                    break;
                }
                if (!equal(major->left(), prem[0]->conclusion()))
                    add(out, occ, "ImpE minor premiss " + to_string(prem[0]->conclusion()) +
                                      " does not match antecedent " + to_string(major->left()));
                if (!equal(major->right(), concl))
                    add(out, occ, "ImpE consequence " + to_string(concl) +
                                      " does not match consequent " + to_string(major->right()));
                break;
            }
            case StepLabel::OrE: {
                const FormulaPtr& major = prem[0]->conclusion();
                if (major->kind() != FormulaKind::Disjunction)
                    add(out, occ, "OrE major premiss " + to_string(major) + " is not a disjunction");
                if (!equal(prem[1]->conclusion(), concl) || !equal(prem[2]->conclusion(), concl))
                    add(out, occ, "OrE vertical premisses must conclude the consequence");
                break;
            }
            case StepLabel::BotE:
                if (prem[0]->conclusion()->kind() != FormulaKind::Absurdity)
                    add(out, occ, "BotE premiss " + to_string(prem[0]->conclusion()) +
                                      " is not the absurdity constant");
                break;
            case StepLabel::AndI:
                if (concl->kind() != FormulaKind::Conjunction)
                    add(out, occ, "AndI consequence is not a conjunction");
                else {
                    if (!equal(prem[0]->conclusion(), concl->left()))
                        add(out, occ, "AndI left premiss mismatch");
                    if (!equal(prem[1]->conclusion(), concl->right()))
                        add(out, occ, "AndI right premiss mismatch");
                }
                break;
            case StepLabel::OrILeft:
            case StepLabel::OrIRight:
                if (concl->kind() != FormulaKind::Disjunction)
                    add(out, occ, "OrI consequence is not a disjunction");
                else {
                    const FormulaPtr& want =
                        node.label() == StepLabel::OrILeft ? concl->left() : concl->right();
                    if (!equal(prem[0]->conclusion(), want))
                        add(out, occ, "OrI premiss " + to_string(prem[0]->conclusion()) +
                                          " does not match disjunct " + to_string(want));
                }
                break;
            case StepLabel::ImpI:
                if (concl->kind() != FormulaKind::Implication)
                    add(out, occ, "ImpI consequence is not an implication");
                else if (!equal(prem[0]->conclusion(), concl->right()))
                    add(out, occ, "ImpI premiss " + to_string(prem[0]->conclusion()) +
                                      " does not match consequent " + to_string(concl->right()));
                break;
        }
    });

    // Discharge patterns: only ImpI and OrE discharge; ImpI discharges its
    // antecedent (possibly vacuously), OrE is checked by validate().
    for (const auto& [leaf, binder] : binders) {
        const ArgumentTree& b = node_at(arg, binder);
        const FormulaPtr& lf = node_at(arg, leaf).conclusion();
        switch (b.label()) {
            case StepLabel::ImpI:
                if (b.conclusion()->kind() == FormulaKind::Implication &&
                    !equal(lf, b.conclusion()->left()))
                    add(out, binder, "ImpI discharges " + to_string(lf) + ", expected antecedent " +
                                         to_string(b.conclusion()->left()));
                break;
            case StepLabel::OrE:
                break;
            default:
                add(out, binder,
                    std::string(label_name(b.label())) + " step cannot discharge assumptions");
                break;
        }
    }

    std::sort(out.begin(), out.end(),
              [](const NjViolation& a, const NjViolation& b) { return a.occ < b.occ; });
    return out;
}

bool is_derivation(const ArgPtr& arg) { return check_nj(arg).empty(); }

namespace {

bool creates_segment_or_detour(const ArgumentTree& node) {
    if (node.is_leaf() || !is_elimination(node.label())) return false;
    const ArgPtr& major = node.premisses()[*major_position(node.label())];
    if (major->is_leaf()) return false;
    StepLabel ml = major->label();
    return is_introduction(ml) || ml == StepLabel::BotE || ml == StepLabel::OrE;
}

}  // namespace

bool is_normal(const ArgPtr& d) {
    bool normal = true;
    for_each_occurrence(d, [&](const OccPath&, const ArgumentTree& node) {
        if (creates_segment_or_detour(node)) normal = false;
    });
    return normal;
}

namespace {

struct TagEnv {
    std::vector<std::pair<std::string, std::string>> renames;
    const std::string* lookup(const std::string& tag) const {
        for (auto it = renames.rbegin(); it != renames.rend(); ++it)
            if (it->first == tag) return &it->second;
        return nullptr;
    }
};

ArgPtr rename_rec(const ArgPtr& node, TagEnv& env, int& counter, const std::string& prefix) {
    if (node->is_leaf()) {
        if (node->tag()) {
            if (const std::string* t = env.lookup(*node->tag()))
                return ArgumentTree::leaf(node->conclusion(), *t);
        }
        return node;
    }
    std::optional<std::string> tag = node->tag();
    std::size_t pushed = 0;
    if (tag) {
        std::string fresh = prefix + std::to_string(counter++);
        env.renames.emplace_back(*tag, fresh);
        pushed = 1;
        tag = fresh;
    }
    std::vector<ArgPtr> prem;
    prem.reserve(node->premisses().size());
    for (const auto& p : node->premisses()) prem.push_back(rename_rec(p, env, counter, prefix));
    while (pushed--) env.renames.pop_back();
    return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), std::move(tag));
}

ArgPtr rename_tags(const ArgPtr& node, int& counter) {
    TagEnv env;
    return rename_rec(node, env, counter, "d");
}

ArgPtr substitute_leaves(const ArgPtr& node, const std::string& tag, const ArgPtr& replacement,
                         int& counter) {
    if (node->is_leaf()) {
        if (node->tag() && *node->tag() == tag) return rename_tags(replacement, counter);
        return node;
    }
    if (node->tag() && *node->tag() == tag) return node;
    std::vector<ArgPtr> prem;
    prem.reserve(node->premisses().size());
    bool changed = false;
    for (const auto& p : node->premisses()) {
        ArgPtr q = substitute_leaves(p, tag, replacement, counter);
        changed |= (q != p);
        prem.push_back(std::move(q));
    }
    if (!changed) return node;
    return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), node->tag());
}

enum class RedexKind { AndDetour, ImpDetour, OrDetour, BotCollapse, Permute, VacuousOr };

struct Redex {
    OccPath occ;
    RedexKind kind;
};

std::optional<RedexKind> redex_at(const ArgumentTree& node) {
    if (node.is_leaf()) return std::nullopt;
    if (is_elimination(node.label())) {
        const ArgPtr& major = node.premisses()[*major_position(node.label())];
        if (!major->is_leaf()) {
            StepLabel ml = major->label();
            if ((node.label() == StepLabel::AndELeft || node.label() == StepLabel::AndERight) &&
                ml == StepLabel::AndI)
                return RedexKind::AndDetour;
            if (node.label() == StepLabel::ImpE && ml == StepLabel::ImpI)
                return RedexKind::ImpDetour;
            if (node.label() == StepLabel::OrE &&
                (ml == StepLabel::OrILeft || ml == StepLabel::OrIRight))
                return RedexKind::OrDetour;
            if (ml == StepLabel::BotE) return RedexKind::BotCollapse;
            if (ml == StepLabel::OrE) return RedexKind::Permute;
        }
    }
    if (node.label() == StepLabel::OrE && node.tag()) {
        if (!has_leaf_tagged(node.premisses()[1], *node.tag()) ||
            !has_leaf_tagged(node.premisses()[2], *node.tag()))
            return RedexKind::VacuousOr;
    }
    return std::nullopt;
}

// Leftmost-innermost: premisses before the node itself.
bool find_redex(const ArgPtr& node, OccPath& occ, Redex& out) {
    for (int i = 0; i < static_cast<int>(node->premisses().size()); i++) {
        occ.push_back(i);
        if (find_redex(node->premisses()[i], occ, out)) return true;
        occ.pop_back();
    }
    if (auto kind = redex_at(*node)) {
        out = Redex{occ, *kind};
        return true;
    }
    return false;
}

ArgPtr reduce(const ArgumentTree& node, RedexKind kind, int& counter) {
    const auto& prem = node.premisses();
    switch (kind) {
        case RedexKind::AndDetour: {
            const ArgPtr& intro = prem[0];
            return node.label() == StepLabel::AndELeft ? intro->premisses()[0]
                                                       : intro->premisses()[1];
        }
        case RedexKind::ImpDetour: {
            const ArgPtr& intro = prem[1];
            const ArgPtr& body = intro->premisses()[0];
            if (!intro->tag()) return body;  // vacuous discharge, minor dropped
            return substitute_leaves(body, *intro->tag(), prem[0], counter);
        }
        case RedexKind::OrDetour: {
            const ArgPtr& intro = prem[0];
            const ArgPtr& vertical =
                intro->label() == StepLabel::OrILeft ? prem[1] : prem[2];
            return substitute_leaves(vertical, *node.tag(), intro->premisses()[0], counter);
        }
        case RedexKind::BotCollapse: {
            const ArgPtr& bot = prem[*major_position(node.label())];
            return ArgumentTree::step(StepLabel::BotE, node.conclusion(),
                                      {bot->premisses()[0]});
        }
        case RedexKind::Permute: {
            int mpos = *major_position(node.label());
            const ArgPtr& inner = prem[mpos];
            auto lift = [&](const ArgPtr& vertical) {
                std::vector<ArgPtr> copy;
                copy.reserve(prem.size());
                for (int i = 0; i < static_cast<int>(prem.size()); i++) {
                    if (i == mpos)
                        copy.push_back(vertical);
                    else
                        copy.push_back(rename_tags(prem[i], counter));
                }
                return ArgumentTree::step(node.label(), node.conclusion(), std::move(copy),
                                          node.tag());
            };
            return ArgumentTree::step(StepLabel::OrE, node.conclusion(),
                                      {inner->premisses()[0], lift(inner->premisses()[1]),
                                       lift(inner->premisses()[2])},
                                      inner->tag());
        }
        case RedexKind::VacuousOr: {
            if (!has_leaf_tagged(prem[1], *node.tag())) return prem[1];
            return prem[2];
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ArgPtr rename_discharge_tags(const ArgPtr& arg, int& counter, const std::string& prefix) {
    TagEnv env;
    return rename_rec(arg, env, counter, prefix);
}

NormalizeResult normalize(const ArgPtr& d, int fuel) {
    {
        auto violations = check_nj(d);
        if (!violations.empty())
            throw InvalidArgumentTree("normalize requires an NJ derivation: " +
                                      violations.front().message);
    }
    int counter = 0;
    ArgPtr cur = rename_tags(d, counter);
    NormalizeResult result;
    while (true) {
        OccPath occ;
        Redex redex;
        if (!find_redex(cur, occ, redex)) break;
        if (result.steps >= fuel)
            throw FuelExhausted("normalization exceeded fuel of " + std::to_string(fuel) +
                                " steps");
        cur = replace_at(cur, redex.occ, reduce(node_at(cur, redex.occ), redex.kind, counter));
        result.steps++;
    }
    int final_counter = 0;
    result.derivation = rename_tags(cur, final_counter);
    return result;
}

}  // namespace pragval
