#include "pragval/extract.hpp"

#include <algorithm>

namespace pragval {

namespace {

void internal_check(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

struct ExtractState {
    int fuel = 100000;
    int tag_counter = 0;
    std::string fresh_prefix = "#c";
    std::vector<std::string> report;

    std::string fresh_tag() { return "x" + std::to_string(tag_counter++); }
};

ArgPtr extract_impl(const ArgPtr& arg, const ValidityWitness& w, ExtractState& st,
                    std::optional<int> outer_degree);

// Binders that could discharge assumptions of a derivation grafted at occ:
// (tag, discharged formula), innermost first.
std::vector<std::pair<std::string, FormulaPtr>> enclosing_binders(const ArgPtr& root,
                                                                  const OccPath& occ) {
    std::vector<std::pair<std::string, FormulaPtr>> out;
    for (std::size_t depth = occ.size(); depth > 0; depth--) {
        OccPath prefix(occ.begin(), occ.begin() + (depth - 1));
        const ArgumentTree& node = node_at(root, prefix);
        if (node.is_leaf() || !node.tag()) continue;
        int child = occ[depth - 1];
        if (node.label() == StepLabel::OrE && (child == 1 || child == 2)) {
            const FormulaPtr& major = node.premisses()[0]->conclusion();
            if (major->kind() == FormulaKind::Disjunction)
                out.emplace_back(*node.tag(), child == 1 ? major->left() : major->right());
        } else if (node.label() == StepLabel::ImpI &&
                   node.conclusion()->kind() == FormulaKind::Implication) {
            out.emplace_back(*node.tag(), node.conclusion()->left());
        }
    }
    return out;
}

ArgPtr rebind_open_leaves(const ArgPtr& node,
                          const std::vector<std::pair<std::string, FormulaPtr>>& binders) {
    if (node->is_leaf()) {
        if (node->tag()) return node;
        for (const auto& [tag, f] : binders)
            if (equal(node->conclusion(), f)) return ArgumentTree::leaf(node->conclusion(), tag);
        return node;
    }
    std::vector<ArgPtr> prem;
    bool changed = false;
    for (const auto& p : node->premisses()) {
        ArgPtr q = rebind_open_leaves(p, binders);
        changed |= (q != p);
        prem.push_back(std::move(q));
    }
    if (!changed) return node;
    return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), node->tag());
}

// Collapse OrE steps left without a discharged case assumption in some
// vertical; the independent vertical already derives the consequence.
ArgPtr repair_vacuous_or(const ArgPtr& node) {
    if (node->is_leaf()) return node;
    std::vector<ArgPtr> prem;
    bool changed = false;
    for (const auto& p : node->premisses()) {
        ArgPtr q = repair_vacuous_or(p);
        changed |= (q != p);
        prem.push_back(std::move(q));
    }
    if (node->label() == StepLabel::OrE && node->tag()) {
        if (!has_leaf_tagged(prem[1], *node->tag())) return prem[1];
        if (!has_leaf_tagged(prem[2], *node->tag())) return prem[2];
    }
    if (!changed) return node;
    return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), node->tag());
}

ArgPtr splice_impl(const NarrowlyValidPackage& pkg, ExtractState& st) {
    std::vector<OccPath> crits = critical_subarguments(pkg.canonical);
    int bound = degree_of_argument(pkg.canonical);

    // Extract replacements against the original core so sub-witness
    // arguments match, then assemble on a tag-renamed copy to keep the
    // discharge namespace disjoint from the extracted parts.
    std::vector<std::pair<OccPath, ArgPtr>> replacements;
    for (const auto& occ : crits) {
        const WitnessPtr* sub = pkg.sub_witness_at(occ);
        internal_check(sub != nullptr, "splice on a package missing a sub-witness");
        ArgPtr crit = subargument_standalone(pkg.canonical, occ);
        replacements.emplace_back(occ, extract_impl(crit, **sub, st, bound));
    }

    ArgPtr assembled = rename_discharge_tags(pkg.canonical, st.tag_counter, "x");
    for (auto& [occ, replacement] : replacements) {
        auto binders = enclosing_binders(assembled, occ);
        assembled = replace_at(assembled, occ, rebind_open_leaves(replacement, binders));
    }
    return repair_vacuous_or(assembled);
}

ArgPtr invert_bot_core(const ArgPtr& d) {
    if (d->is_leaf())
        throw ExtractionError(
            "absurdity inversion: conclusion is an assumption, contradicting freshness");
    switch (d->label()) {
        case StepLabel::BotE:
            return d->premisses()[0];
        case StepLabel::OrE: {
            ArgPtr b1 = invert_bot_core(d->premisses()[1]);
            ArgPtr b2 = invert_bot_core(d->premisses()[2]);
            const std::string& tag = *d->tag();
            // A vertical no longer using its case assumption already derives
            // absurdity outright.
            if (!has_leaf_tagged(b1, tag)) return b1;
            if (!has_leaf_tagged(b2, tag)) return b2;
            return ArgumentTree::step(StepLabel::OrE, Formula::absurdity(),
                                      {d->premisses()[0], std::move(b1), std::move(b2)}, tag);
        }
        default:
            throw ExtractionError(std::string("absurdity inversion: conclusion obtained by ") +
                                  label_name(d->label()) +
                                  ", impossible for a fresh atomic conclusion");
    }
}

ArgPtr invert_or_core(const ArgPtr& d, const FormulaPtr& target, const FormulaPtr& a_to_c,
                      const FormulaPtr& b_to_c) {
    if (d->is_leaf())
        throw ExtractionError(
            "disjunction inversion: conclusion is an assumption, contradicting freshness");
    switch (d->label()) {
        case StepLabel::BotE:
            return ArgumentTree::step(StepLabel::BotE, target, {d->premisses()[0]});
        case StepLabel::OrE: {
            ArgPtr r1 = invert_or_core(d->premisses()[1], target, a_to_c, b_to_c);
            ArgPtr r2 = invert_or_core(d->premisses()[2], target, a_to_c, b_to_c);
            const std::string& tag = *d->tag();
            if (!has_leaf_tagged(r1, tag)) return r1;
            if (!has_leaf_tagged(r2, tag)) return r2;
            return ArgumentTree::step(StepLabel::OrE, target,
                                      {d->premisses()[0], std::move(r1), std::move(r2)}, tag);
        }
        case StepLabel::ImpE: {
            const FormulaPtr& major = d->premisses()[1]->conclusion();
            if (equal(major, a_to_c))
                return ArgumentTree::step(StepLabel::OrILeft, target, {d->premisses()[0]});
            if (equal(major, b_to_c))
                return ArgumentTree::step(StepLabel::OrIRight, target, {d->premisses()[0]});
            throw ExtractionError("disjunction inversion: ImpE major " + to_string(major) +
                                  " is not one of the assumed arrow premisses");
        }
        default:
            throw ExtractionError(std::string("disjunction inversion: conclusion obtained by ") +
                                  label_name(d->label()) +
                                  ", impossible for a fresh atomic conclusion");
    }
}

bool mentions_atom(const ArgPtr& tree, const std::string& atom) {
    bool found = false;
    for_each_occurrence(tree, [&](const OccPath&, const ArgumentTree& node) {
        if (contains_atom(node.conclusion(), atom)) found = true;
    });
    return found;
}

ArgPtr invert_or_impl(const ArgPtr& d, const FormulaPtr& a, const FormulaPtr& b,
                      const FormulaPtr& c_atom, int fuel) {
    if (!is_atomic(c_atom))
        throw ExtractionError("disjunction inversion requires an atomic fresh conclusion");
    FormulaPtr target = Formula::disj(a, b);
    FormulaPtr a_to_c = Formula::implies(a, c_atom);
    FormulaPtr b_to_c = Formula::implies(b, c_atom);
    ArgPtr rebuilt = invert_or_core(d, target, a_to_c, b_to_c);
    ArgPtr normal = normalize(rebuilt, fuel).derivation;
    FormulaSet opens = assumption_set(normal);
    if (opens.count(a_to_c) || opens.count(b_to_c))
        throw ExtractionError(
            "disjunction inversion: normal form still assumes an arrow premiss, which the "
            "freshness of " + to_string(c_atom) + " rules out");
    internal_check(!mentions_atom(normal, c_atom->atom_name()),
                   "fresh atom survived disjunction inversion");
    return normal;
}

ArgPtr invert_imp_impl(const ArgPtr& d, const FormulaPtr& antecedent, ExtractState& st) {
    FormulaPtr concl = Formula::implies(antecedent, d->conclusion());
    std::string tag = st.fresh_tag();
    bool found = false;
    struct Retagger {
        const FormulaPtr& f;
        const std::string& tag;
        bool& found;
        ArgPtr walk(const ArgPtr& node) {
            if (node->is_leaf()) {
                if (!node->tag() && equal(node->conclusion(), f)) {
                    found = true;
                    return ArgumentTree::leaf(node->conclusion(), tag);
                }
                return node;
            }
            std::vector<ArgPtr> prem;
            bool changed = false;
            for (const auto& p : node->premisses()) {
                ArgPtr q = walk(p);
                changed |= (q != p);
                prem.push_back(std::move(q));
            }
            if (!changed) return node;
            return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem),
                                      node->tag());
        }
    } retagger{antecedent, tag, found};
    ArgPtr body = retagger.walk(d);
    if (!found) return ArgumentTree::step(StepLabel::ImpI, concl, {d});  // vacuous discharge
    return ArgumentTree::step(StepLabel::ImpI, concl, {body}, tag);
}

// Walks the connective spine of the conclusion, consuming the proof-case
// complementations in generation order and applying the matching inversion.
struct Deriver {
    const ValidityWitness& w;
    const std::vector<Complementation>& comps;
    ExtractState& st;
    std::size_t next = 0;

    const Complementation& take() {
        internal_check(next < comps.size(), "complementation chain exhausted");
        return comps[next++];
    }

    ArgPtr spliced_package(const Complementation& comp) {
        const NarrowlyValidPackage* pkg = w.lookup(comp);
        internal_check(pkg != nullptr, "validated witness lost a complementation");
        return splice_impl(*pkg, st);
    }

    ArgPtr derive(const FormulaPtr& f, int parent_degree = -1) {
        if (parent_degree >= 0)
            internal_check(f->degree() < parent_degree,
                           "spine descent must strictly decrease the formula degree");
        switch (f->kind()) {
            case FormulaKind::Atom: {
                const Complementation& comp = take();
                internal_check(equal(comp.conclusion(), f), "complementation order mismatch");
                st.report.push_back("case " + to_string(f) + ": identity splice");
                return spliced_package(comp);
            }
            case FormulaKind::Absurdity: {
                const Complementation& comp = take();
                internal_check(!comp.is_identity() &&
                                   comp.extension->label() == StepLabel::BotE,
                               "complementation order mismatch at absurdity");
                st.report.push_back("case _|_: absurdity inversion via " +
                                    to_string(comp.conclusion()));
                return invert_bot(spliced_package(comp));
            }
            case FormulaKind::Disjunction: {
                const Complementation& comp = take();
                internal_check(!comp.is_identity() && comp.extension->label() == StepLabel::OrE &&
                                   equal(comp.extension->premisses()[0]->conclusion(), f),
                               "complementation order mismatch at disjunction");
                st.report.push_back("case " + to_string(f) + ": disjunction inversion via " +
                                    to_string(comp.conclusion()));
                return invert_or_impl(spliced_package(comp), f->left(), f->right(),
                                      comp.conclusion(), st.fuel);
            }
            case FormulaKind::Conjunction: {
                ArgPtr left = derive(f->left(), f->degree());
                ArgPtr right = derive(f->right(), f->degree());
                st.report.push_back("case " + to_string(f) + ": conjunction introduction");
                return ArgumentTree::step(StepLabel::AndI, f, {std::move(left), std::move(right)});
            }
            case FormulaKind::Implication: {
                ArgPtr body = derive(f->right(), f->degree());
                st.report.push_back("case " + to_string(f) +
                                    ": implication introduction discharging " +
                                    to_string(f->left()));
                return invert_imp_impl(body, f->left(), st);
            }
        }
        throw std::logic_error("unreachable");
    }
};

ArgPtr extract_impl(const ArgPtr& arg, const ValidityWitness& w, ExtractState& st,
                    std::optional<int> outer_degree) {
    int deg = degree_of_argument(arg);
    if (outer_degree)
        internal_check(deg < *outer_degree,
                       "extraction recursion must strictly decrease the argument degree");

    std::vector<Complementation> comps = proof_case_complementation(arg, st.fresh_prefix);
    ValidityReport report = check_validity(arg, w, comps, st.fresh_prefix);
    if (!report.valid) {
        std::string msg = "extraction requires a passing validity witness:";
        for (const auto& line : report.flatten()) msg += "\n  " + line;
        throw ExtractionError(msg);
    }

    Deriver deriver{w, comps, st};
    ArgPtr result = deriver.derive(arg->conclusion());
    internal_check(deriver.next == comps.size(), "unused complementations after extraction");

    auto violations = check_nj(result);
    if (!violations.empty())
        throw ExtractionError("extracted tree is not an NJ derivation: " +
                              violations.front().message + " at " +
                              occ_to_string(violations.front().occ));
    internal_check(equal(result->conclusion(), arg->conclusion()),
                   "extraction changed the conclusion");

    FormulaSet gamma = assumption_set(arg);
    for (const auto& f : assumption_set(result))
        if (!gamma.count(f))
            throw ExtractionError("extracted derivation assumes " + to_string(f) +
                                  ", which is not among the argument's assumptions");

    std::set<std::string> base_atoms;
    for_each_occurrence(arg, [&](const OccPath&, const ArgumentTree& node) {
        collect_atoms(node.conclusion(), base_atoms);
    });
    bool leaked = false;
    std::string leaked_atom;
    for_each_occurrence(result, [&](const OccPath&, const ArgumentTree& node) {
        std::set<std::string> atoms;
        collect_atoms(node.conclusion(), atoms);
        for (const auto& a : atoms)
            if (!base_atoms.count(a)) {
                leaked = true;
                leaked_atom = a;
            }
    });
    if (leaked)
        throw ExtractionError("extracted derivation mentions invented atom " + leaked_atom);

    return result;
}

}  // namespace

ArgPtr splice_critical(const NarrowlyValidPackage& pkg, int fuel) {
    {
        auto violations = check_narrow_validity(pkg, degree_of_argument(pkg.canonical));
        if (!violations.empty())
            throw ExtractionError("splice requires a narrowly valid package: " + violations.front());
    }
    ExtractState st;
    st.fuel = fuel;
    ArgPtr result = splice_impl(pkg, st);
    auto violations = check_nj(result);
    if (!violations.empty())
        throw ExtractionError("spliced tree is not an NJ derivation: " +
                              violations.front().message);
    return result;
}

ArgPtr invert_bot(const ArgPtr& d) { return invert_bot_core(d); }

ArgPtr invert_or(const ArgPtr& d, const FormulaPtr& a, const FormulaPtr& b,
                 const FormulaPtr& c_atom, int fuel) {
    return invert_or_impl(d, a, b, c_atom, fuel);
}

ArgPtr invert_and(const ArgPtr& d_left, const ArgPtr& d_right) {
    return ArgumentTree::step(StepLabel::AndI,
                              Formula::conj(d_left->conclusion(), d_right->conclusion()),
                              {d_left, d_right});
}

ArgPtr invert_imp(const ArgPtr& d, const FormulaPtr& antecedent) {
    ExtractState st;
    // Pick a tag namespace disjoint from the derivation's own tags.
    int max_used = -1;
    for_each_occurrence(d, [&](const OccPath&, const ArgumentTree& node) {
        if (node.tag() && node.tag()->size() > 1 && (*node.tag())[0] == 'x') {
            try {
                max_used = std::max(max_used, std::stoi(node.tag()->substr(1)));
            } catch (...) {
            }
        }
    });
    st.tag_counter = max_used + 1;
    return invert_imp_impl(d, antecedent, st);
}

ExtractionResult extract(const ArgPtr& arg, const ValidityWitness& w, int fuel,
                         const std::string& fresh_prefix) {
    ExtractState st;
    st.fuel = fuel;
    st.fresh_prefix = fresh_prefix;
    st.report.push_back("conclusion: " + to_string(arg->conclusion()));
    {
        std::string gamma;
        for (const auto& f : assumption_set(arg)) {
            if (!gamma.empty()) gamma += ", ";
            gamma += to_string(f);
        }
        st.report.push_back("assumptions: " + (gamma.empty() ? "(none)" : gamma));
    }
    ArgPtr d = extract_impl(arg, w, st, std::nullopt);
    ExtractionResult result;
    result.derivation = d;
    result.report = std::move(st.report);
    result.report.push_back("derived-assumptions: [" + [&] {
        std::string s;
        for (const auto& f : assumption_set(d)) {
            if (!s.empty()) s += ", ";
            s += to_string(f);
        }
        return s;
    }() + "]");
    result.report.push_back("nj-check: ok");
    return result;
}

}  // namespace pragval
