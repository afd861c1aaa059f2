#include "pragval/witness.hpp"

#include <algorithm>

#include "pragval/treeio.hpp"

namespace pragval {

const WitnessPtr* NarrowlyValidPackage::sub_witness_at(const OccPath& occ) const {
    for (const auto& [o, w] : sub_witnesses)
        if (o == occ) return &w;
    return nullptr;
}

const NarrowlyValidPackage* ValidityWitness::lookup(const Complementation& comp) const {
    std::uint64_t key = comp.key();
    for (const auto& entry : entries)
        if (entry.comp.key() == key && complementations_equal(entry.comp, comp))
            return &entry.package;
    return nullptr;
}

namespace {

void internal_check(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

ValidityReport check_validity_impl(const ArgPtr& arg, const ValidityWitness& w,
                                   const std::vector<Complementation>& comps,
                                   std::optional<int> outer_degree,
                                   const std::string& fresh_prefix);

std::vector<std::string> check_narrow_validity_impl(const NarrowlyValidPackage& pkg,
                                                    int degree_bound,
                                                    std::optional<int> outer_degree,
                                                    const std::string& fresh_prefix) {
    std::vector<std::string> violations;
    if (!pkg.canonical) return {"package has no canonical argument"};
    for (const auto& msg : validate(pkg.canonical)) violations.push_back("core: " + msg);
    if (!violations.empty()) return violations;
    if (!is_canonical(pkg.canonical)) {
        violations.push_back("core argument is not canonical");
        return violations;
    }

    std::vector<OccPath> crits = critical_subarguments(pkg.canonical);
    for (const auto& occ : crits) {
        ArgPtr crit = subargument_standalone(pkg.canonical, occ);
        int crit_degree = degree_of_argument(crit);
        if (crit_degree >= degree_bound) {
            violations.push_back("critical subargument at " + occ_to_string(occ) + " has degree " +
                                 std::to_string(crit_degree) + ", not below " +
                                 std::to_string(degree_bound));
            continue;
        }
        const WitnessPtr* sub = pkg.sub_witness_at(occ);
        if (!sub) {
            violations.push_back("missing sub-witness for critical subargument at " +
                                 occ_to_string(occ));
            continue;
        }
        if (!trees_equal((*sub)->argument, crit)) {
            violations.push_back("sub-witness at " + occ_to_string(occ) +
                                 " declares a different argument");
            continue;
        }
        auto sub_comps = proof_case_complementation(crit, fresh_prefix);
        ValidityReport sub_report =
            check_validity_impl(crit, **sub, sub_comps, outer_degree, fresh_prefix);
        if (!sub_report.valid)
            for (const auto& msg : sub_report.flatten())
                violations.push_back("critical at " + occ_to_string(occ) + ": " + msg);
    }

    for (const auto& entry : pkg.sub_witnesses) {
        if (std::find(crits.begin(), crits.end(), entry.first) == crits.end())
            violations.push_back("sub-witness at " + occ_to_string(entry.first) +
                                 " does not correspond to a critical subargument");
    }
    return violations;
}

ValidityReport check_validity_impl(const ArgPtr& arg, const ValidityWitness& w,
                                   const std::vector<Complementation>& comps,
                                   std::optional<int> outer_degree,
                                   const std::string& fresh_prefix) {
    int deg = degree_of_argument(arg);
    if (outer_degree)
        internal_check(deg < *outer_degree,
                       "witness recursion must strictly decrease the argument degree");

    ValidityReport report;
    if (!w.argument || !trees_equal(w.argument, arg))
        report.messages.push_back("witness declares a different argument");
    for (const auto& msg : validate(arg)) report.messages.push_back("argument: " + msg);

    FormulaSet gamma = assumption_set(arg);
    for (const auto& comp : comps) {
        CompVerdict verdict;
        verdict.key = comp.key();
        verdict.conclusion = to_string(comp.conclusion());
        if (!trees_equal(comp.base, arg)) {
            verdict.messages.push_back("complementation is not for this argument");
            report.verdicts.push_back(std::move(verdict));
            continue;
        }
        for (const auto& msg : check_complementation(comp))
            verdict.messages.push_back("complementation: " + msg);

        const NarrowlyValidPackage* pkg = w.lookup(comp);
        if (!pkg) {
            verdict.messages.push_back("responder undefined on this complementation");
            report.verdicts.push_back(std::move(verdict));
            continue;
        }
        if (!equal(pkg->canonical->conclusion(), comp.conclusion()))
            verdict.messages.push_back("package concludes " + to_string(pkg->canonical->conclusion()) +
                                       ", complementation requires " + to_string(comp.conclusion()));
        FormulaSet allowed = gamma;
        for (const auto& f : comp.delta) allowed.insert(f);
        for (const auto& f : assumption_set(pkg->canonical))
            if (!allowed.count(f))
                verdict.messages.push_back("package assumption " + to_string(f) +
                                           " is outside gamma and the auxiliaries");
        if (verdict.messages.empty()) {
            int bound = degree_of_argument(pkg->canonical);
            for (const auto& msg : check_narrow_validity_impl(*pkg, bound, deg, fresh_prefix))
                verdict.messages.push_back(msg);
        }
        verdict.ok = verdict.messages.empty();
        report.verdicts.push_back(std::move(verdict));
    }

    report.valid = report.messages.empty() &&
                   std::all_of(report.verdicts.begin(), report.verdicts.end(),
                               [](const CompVerdict& v) { return v.ok; });
    return report;
}

}  // namespace

std::vector<std::string> ValidityReport::flatten() const {
    std::vector<std::string> out = messages;
    for (const auto& v : verdicts) {
        for (const auto& msg : v.messages)
            out.push_back("complementation to " + v.conclusion + ": " + msg);
    }
    return out;
}

std::vector<std::string> check_narrow_validity(const NarrowlyValidPackage& pkg, int degree_bound,
                                               const std::string& fresh_prefix) {
    return check_narrow_validity_impl(pkg, degree_bound, std::nullopt, fresh_prefix);
}

ValidityReport check_validity(const ArgPtr& arg, const ValidityWitness& w,
                              const std::vector<Complementation>& comps,
                              const std::string& fresh_prefix) {
    return check_validity_impl(arg, w, comps, std::nullopt, fresh_prefix);
}

ValidityReport check_validity(const ArgPtr& arg, const ValidityWitness& w,
                              const std::string& fresh_prefix) {
    return check_validity(arg, w, proof_case_complementation(arg, fresh_prefix), fresh_prefix);
}

// --- Bounded search ---------------------------------------------------------

namespace {

struct Searcher {
    int tag_counter = 0;

    static bool member(const FormulaSet& s, const FormulaPtr& f) { return s.count(f) > 0; }

    // Retag every open leaf of the given formula so it is discharged by an
    // enclosing binder; returns nullopt when no such leaf exists.
    static std::optional<ArgPtr> bind_open_leaves(const ArgPtr& node, const FormulaPtr& f,
                                                  const std::string& tag) {
        bool found = false;
        ArgPtr out = retag(node, f, tag, found);
        if (!found) return std::nullopt;
        return out;
    }

    static ArgPtr retag(const ArgPtr& node, const FormulaPtr& f, const std::string& tag,
                        bool& found) {
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
            ArgPtr q = retag(p, f, tag, found);
            changed |= (q != p);
            prem.push_back(std::move(q));
        }
        if (!changed) return node;
        return ArgumentTree::step(node->label(), node->conclusion(), std::move(prem), node->tag());
    }

    // Canonical argument concluding goal from assumptions within s.
    std::optional<ArgPtr> package(const FormulaPtr& goal, const FormulaSet& s, int depth) {
        if (member(s, goal)) return ArgumentTree::leaf(goal);
        if (depth <= 0) return std::nullopt;
        for (const auto& principal : s) {
            if (auto tree = spine(principal, ArgumentTree::leaf(principal), goal, s, depth))
                return tree;
        }
        return std::nullopt;
    }

    std::optional<ArgPtr> minor_for(const FormulaPtr& f, const FormulaSet& s, int depth) {
        if (member(s, f)) return ArgumentTree::leaf(f);
        return package(f, s, depth);
    }

    // Extend the elimination spine below `tree` (which concludes f) until it
    // reaches the goal.
    std::optional<ArgPtr> spine(const FormulaPtr& f, ArgPtr tree, const FormulaPtr& goal,
                                const FormulaSet& s, int depth) {
        if (equal(f, goal) && !tree->is_leaf()) return tree;
        switch (f->kind()) {
            case FormulaKind::Atom:
                return std::nullopt;
            case FormulaKind::Absurdity:
                return ArgumentTree::step(StepLabel::BotE, goal, {std::move(tree)});
            case FormulaKind::Conjunction: {
                if (auto r = spine(f->left(),
                                   ArgumentTree::step(StepLabel::AndELeft, f->left(), {tree}),
                                   goal, s, depth))
                    return r;
                return spine(f->right(),
                             ArgumentTree::step(StepLabel::AndERight, f->right(), {tree}), goal, s,
                             depth);
            }
            case FormulaKind::Implication: {
                auto minor = minor_for(f->left(), s, depth - 1);
                if (!minor) return std::nullopt;
                return spine(f->right(),
                             ArgumentTree::step(StepLabel::ImpE, f->right(),
                                                {std::move(*minor), std::move(tree)}),
                             goal, s, depth);
            }
            case FormulaKind::Disjunction: {
                FormulaSet s1 = s;
                s1.insert(f->left());
                auto v1 = package(goal, s1, depth - 1);
                if (!v1) return std::nullopt;
                FormulaSet s2 = s;
                s2.insert(f->right());
                auto v2 = package(goal, s2, depth - 1);
                if (!v2) return std::nullopt;
                std::string tag = "s" + std::to_string(tag_counter++);
                auto b1 = bind_open_leaves(*v1, f->left(), tag);
                auto b2 = bind_open_leaves(*v2, f->right(), tag);
                if (!b1 || !b2) return std::nullopt;  // a vacuous OrE would be superfluous
                return ArgumentTree::step(StepLabel::OrE, goal,
                                          {std::move(tree), std::move(*b1), std::move(*b2)}, tag);
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<ValidityWitness> search_witness(const ArgPtr& arg, int depth_bound, int atom_bound,
                                              const std::string& fresh_prefix) {
    std::set<std::string> avoid;
    for_each_occurrence(arg, [&](const OccPath&, const ArgumentTree& node) {
        collect_atoms(node.conclusion(), avoid);
    });
    FreshAtomSupply supply(std::move(avoid), fresh_prefix, atom_bound);
    std::vector<Complementation> comps;
    try {
        comps = proof_case_complementation(arg, supply);
    } catch (const SupplyExhausted&) {
        return std::nullopt;
    }

    ValidityWitness w;
    w.argument = arg;
    FormulaSet gamma = assumption_set(arg);
    Searcher searcher;
    for (const auto& comp : comps) {
        FormulaSet s = gamma;
        for (const auto& f : comp.delta) s.insert(f);
        auto pkg = searcher.package(comp.conclusion(), s, depth_bound);
        if (!pkg) return std::nullopt;
        w.entries.push_back(ValidityWitness::Entry{comp, NarrowlyValidPackage{*pkg, {}}});
    }
    if (!check_validity(arg, w, comps).valid) return std::nullopt;
    return w;
}

// --- Serialization -----------------------------------------------------------

namespace {

void serialize_package(std::string& out, const NarrowlyValidPackage& pkg, int indent);
void serialize_witness_rec(std::string& out, const ValidityWitness& w, int indent);

void pad(std::string& out, int indent) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
}

void serialize_comp(std::string& out, const Complementation& comp, int indent) {
    pad(out, indent);
    out += "(complementation";
    pad(out, indent + 1);
    out += "(delta";
    for (const auto& f : comp.delta) out += " (" + to_string(f) + ")";
    out += ")";
    pad(out, indent + 1);
    out += "(fresh";
    for (const auto& a : comp.fresh_atoms) out += " " + a;
    out += ")";
    pad(out, indent + 1);
    out += "(extension " + serialize_argument(comp.extension, false) + ")";
    out += ")";
}

void serialize_package(std::string& out, const NarrowlyValidPackage& pkg, int indent) {
    pad(out, indent);
    out += "(package";
    pad(out, indent + 1);
    out += "(canonical " + serialize_argument(pkg.canonical, false) + ")";
    for (const auto& [occ, sub] : pkg.sub_witnesses) {
        pad(out, indent + 1);
        out += "(sub (at " + occ_to_string(occ) + ")";
        serialize_witness_rec(out, *sub, indent + 2);
        out += ")";
    }
    out += ")";
}

void serialize_witness_rec(std::string& out, const ValidityWitness& w, int indent) {
    pad(out, indent);
    out += "(witness";
    pad(out, indent + 1);
    out += "(argument " + serialize_argument(w.argument, false) + ")";
    pad(out, indent + 1);
    out += "(entries";
    for (const auto& entry : w.entries) {
        pad(out, indent + 2);
        out += "(entry";
        serialize_comp(out, entry.comp, indent + 3);
        serialize_package(out, entry.package, indent + 3);
        out += ")";
    }
    out += "))";
}

OccPath parse_occ(const std::string& token, std::size_t position) {
    if (token == "root") return {};
    OccPath occ;
    std::size_t pos = 0;
    while (pos < token.size()) {
        std::size_t dot = token.find('.', pos);
        std::string part = token.substr(pos, dot == std::string::npos ? dot : dot - pos);
        try {
            occ.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw ParseError("malformed occurrence '" + token + "'", position);
        }
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return occ;
}

Complementation comp_from_sexp(const Sexp& s, const ArgPtr& base) {
    if (!s.head_is("complementation"))
        throw ParseError("expected (complementation ...)", s.position);
    Complementation comp;
    comp.base = base;
    for (std::size_t i = 1; i < s.items.size(); i++) {
        const Sexp& item = s.items[i];
        if (item.head_is("delta")) {
            for (std::size_t j = 1; j < item.items.size(); j++) {
                const Sexp& g = item.items[j];
                if (!g.is_list) throw ParseError("delta formulas must be parenthesized", g.position);
                comp.delta.push_back(parse_formula(flatten_tokens(g, 0, g.items.size())));
            }
        } else if (item.head_is("fresh")) {
            for (std::size_t j = 1; j < item.items.size(); j++)
                comp.fresh_atoms.push_back(item.at(j).token);
        } else if (item.head_is("extension")) {
            comp.extension = argument_from_sexp(item.at(1));
        } else {
            throw ParseError("unknown complementation field", item.position);
        }
    }
    if (!comp.extension) throw ParseError("complementation missing extension", s.position);
    return comp;
}

ValidityWitness witness_from_sexp(const Sexp& s);

NarrowlyValidPackage package_from_sexp(const Sexp& s) {
    if (!s.head_is("package")) throw ParseError("expected (package ...)", s.position);
    NarrowlyValidPackage pkg;
    for (std::size_t i = 1; i < s.items.size(); i++) {
        const Sexp& item = s.items[i];
        if (item.head_is("canonical")) {
            pkg.canonical = argument_from_sexp(item.at(1));
        } else if (item.head_is("sub")) {
            const Sexp& at = item.at(1);
            if (!at.head_is("at")) throw ParseError("expected (at OCC)", at.position);
            OccPath occ = parse_occ(at.at(1).token, at.position);
            auto sub = std::make_shared<ValidityWitness>(witness_from_sexp(item.at(2)));
            pkg.sub_witnesses.emplace_back(std::move(occ), std::move(sub));
        } else {
            throw ParseError("unknown package field", item.position);
        }
    }
    if (!pkg.canonical) throw ParseError("package missing canonical argument", s.position);
    return pkg;
}

ValidityWitness witness_from_sexp(const Sexp& s) {
    if (!s.head_is("witness")) throw ParseError("expected (witness ...)", s.position);
    ValidityWitness w;
    for (std::size_t i = 1; i < s.items.size(); i++) {
        const Sexp& item = s.items[i];
        if (item.head_is("argument")) {
            w.argument = argument_from_sexp(item.at(1));
        } else if (item.head_is("entries")) {
            for (std::size_t j = 1; j < item.items.size(); j++) {
                const Sexp& e = item.items[j];
                if (!e.head_is("entry")) throw ParseError("expected (entry ...)", e.position);
                ValidityWitness::Entry entry;
                entry.comp = comp_from_sexp(e.at(1), nullptr);
                entry.package = package_from_sexp(e.at(2));
                w.entries.push_back(std::move(entry));
            }
        } else {
            throw ParseError("unknown witness field", item.position);
        }
    }
    if (!w.argument) throw ParseError("witness missing argument", s.position);
    for (auto& entry : w.entries) entry.comp.base = w.argument;
    return w;
}

}  // namespace

std::string serialize_witness(const ValidityWitness& w, bool pretty) {
    std::string out;
    serialize_witness_rec(out, w, 0);
    if (!pretty) {
        std::string flat;
        for (char c : out) {
            if (c == '\n') continue;
            flat += c;
        }
        return flat;
    }
    return out.substr(1);  // drop the leading newline
}

ValidityWitness parse_witness(const std::string& text) {
    return witness_from_sexp(parse_sexp(text));
}

}  // namespace pragval
