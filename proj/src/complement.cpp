#include "pragval/complement.hpp"

#include <algorithm>

#include "pragval/treeio.hpp"

namespace pragval {

FreshAtomSupply::FreshAtomSupply(std::set<std::string> avoid, std::string prefix, int limit)
    : avoid_(std::move(avoid)), prefix_(std::move(prefix)), limit_(limit) {}

std::string FreshAtomSupply::next() {
    while (true) {
        if (limit_ >= 0 && counter_ >= limit_)
            throw SupplyExhausted("fresh atom supply exhausted");
        std::string name = prefix_ + std::to_string(counter_++);
        if (!avoid_.count(name)) return name;
    }
}

namespace {

std::set<std::string> atoms_of_tree(const ArgPtr& arg) {
    std::set<std::string> out;
    for_each_occurrence(arg, [&](const OccPath&, const ArgumentTree& node) {
        collect_atoms(node.conclusion(), out);
    });
    return out;
}

// The principal-assumption leaf of the extension: top of the major spine.
OccPath graft_occ(const ArgPtr& extension) {
    OccPath occ;
    const ArgumentTree* node = extension.get();
    while (!node->is_leaf()) {
        auto major = major_position(node->label());
        if (!major)
            throw InvalidArgumentTree("complementation extension spine is not all eliminations");
        occ.push_back(*major);
        node = node->premisses()[*major].get();
    }
    return occ;
}

}  // namespace

ArgPtr Complementation::full() const {
    if (is_identity()) return base;
    return replace_at(extension, graft_occ(extension), base);
}

std::vector<CompStep> Complementation::path_steps() const {
    std::vector<CompStep> steps;
    const ArgumentTree* node = extension.get();
    while (!node->is_leaf()) {
        CompStep step;
        step.label = node->label();
        if (node->label() == StepLabel::ImpE) {
            step.introduced.push_back(node->premisses()[0]->conclusion());
        } else if (node->label() == StepLabel::OrE) {
            // Verticals are ImpE from the assumed arrow premisses.
            for (int v = 1; v <= 2; v++) {
                const ArgPtr& vert = node->premisses()[v];
                if (!vert->is_leaf() && vert->label() == StepLabel::ImpE)
                    step.introduced.push_back(vert->premisses()[1]->conclusion());
            }
        }
        steps.push_back(std::move(step));
        node = node->premisses()[*major_position(node->label())].get();
    }
    std::reverse(steps.begin(), steps.end());  // order from the complemented conclusion down
    return steps;
}

FormulaSet Complementation::delta_star(std::size_t step_index) const {
    auto steps = path_steps();
    FormulaSet out(delta.begin(), delta.end());
    if (step_index < steps.size())
        for (const auto& f : steps[step_index].introduced) out.erase(f);
    return out;
}

std::string Complementation::serialize(bool pretty) const {
    std::string sep = pretty ? "\n  " : " ";
    std::string out = "(complementation";
    out += sep + "(delta";
    for (const auto& f : delta) out += " (" + to_string(f) + ")";
    out += ")";
    out += sep + "(fresh";
    for (const auto& a : fresh_atoms) out += " " + a;
    out += ")";
    out += sep + "(extension " + serialize_argument(extension, false) + ")";
    out += pretty ? "\n)" : ")";
    return out;
}

std::uint64_t Complementation::key() const {
    std::string text = serialize(false);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

bool complementations_equal(const Complementation& a, const Complementation& b) {
    if (!trees_equal(a.extension, b.extension)) return false;
    if (a.fresh_atoms != b.fresh_atoms) return false;
    if (a.delta.size() != b.delta.size()) return false;
    for (std::size_t i = 0; i < a.delta.size(); i++)
        if (!equal(a.delta[i], b.delta[i])) return false;
    return trees_equal(a.base, b.base);
}

Complementation complement_atomic(const ArgPtr& arg) {
    if (!is_atomic(arg->conclusion()))
        throw InvalidArgumentTree("complement_atomic requires an atomic conclusion, got " +
                                  to_string(arg->conclusion()));
    Complementation comp;
    comp.base = arg;
    comp.extension = ArgumentTree::leaf(arg->conclusion());
    return comp;
}

namespace {

struct CompBuilder {
    ArgPtr base;
    FreshAtomSupply& supply;
    int tag_counter = 0;
    std::vector<Complementation> out;

    // spine concludes g and carries the base conclusion at its graft leaf.
    void rec(const FormulaPtr& g, const ArgPtr& spine, std::vector<FormulaPtr> delta,
             std::vector<std::string> fresh) {
        switch (g->kind()) {
            case FormulaKind::Atom: {
                Complementation comp;
                comp.base = base;
                comp.extension = spine;
                comp.delta = std::move(delta);
                comp.fresh_atoms = std::move(fresh);
                out.push_back(std::move(comp));
                return;
            }
            case FormulaKind::Absurdity: {
                std::string c = supply.next();
                fresh.push_back(c);
                ArgPtr ext = ArgumentTree::step(StepLabel::BotE, Formula::atom(c), {spine});
                Complementation comp;
                comp.base = base;
                comp.extension = std::move(ext);
                comp.delta = std::move(delta);
                comp.fresh_atoms = std::move(fresh);
                out.push_back(std::move(comp));
                return;
            }
            case FormulaKind::Conjunction: {
                rec(g->left(),
                    ArgumentTree::step(StepLabel::AndELeft, g->left(), {spine}), delta, fresh);
                rec(g->right(),
                    ArgumentTree::step(StepLabel::AndERight, g->right(), {spine}), delta, fresh);
                return;
            }
            case FormulaKind::Implication: {
                delta.push_back(g->left());
                ArgPtr minor = ArgumentTree::leaf(g->left());
                rec(g->right(),
                    ArgumentTree::step(StepLabel::ImpE, g->right(), {minor, spine}), delta, fresh);
                return;
            }
            case FormulaKind::Disjunction: {
                std::string c = supply.next();
                fresh.push_back(c);
                FormulaPtr catom = Formula::atom(c);
                FormulaPtr a_to_c = Formula::implies(g->left(), catom);
                FormulaPtr b_to_c = Formula::implies(g->right(), catom);
                std::string tag = "u" + std::to_string(tag_counter++);
                ArgPtr v1 = ArgumentTree::step(
                    StepLabel::ImpE, catom,
                    {ArgumentTree::leaf(g->left(), tag), ArgumentTree::leaf(a_to_c)});
                ArgPtr v2 = ArgumentTree::step(
                    StepLabel::ImpE, catom,
                    {ArgumentTree::leaf(g->right(), tag), ArgumentTree::leaf(b_to_c)});
                ArgPtr ext =
                    ArgumentTree::step(StepLabel::OrE, catom, {spine, v1, v2}, tag);
                delta.push_back(a_to_c);
                delta.push_back(b_to_c);
                Complementation comp;
                comp.base = base;
                comp.extension = std::move(ext);
                comp.delta = std::move(delta);
                comp.fresh_atoms = std::move(fresh);
                out.push_back(std::move(comp));
                return;
            }
        }
    }
};

}  // namespace

std::vector<Complementation> proof_case_complementation(const ArgPtr& arg,
                                                        FreshAtomSupply& supply) {
    CompBuilder builder{arg, supply, 0, {}};
    builder.rec(arg->conclusion(), ArgumentTree::leaf(arg->conclusion()), {}, {});
    return std::move(builder.out);
}

std::vector<Complementation> proof_case_complementation(const ArgPtr& arg,
                                                        const std::string& prefix) {
    FreshAtomSupply supply = default_supply(arg, prefix);
    return proof_case_complementation(arg, supply);
}

FreshAtomSupply default_supply(const ArgPtr& arg, const std::string& prefix) {
    return FreshAtomSupply(atoms_of_tree(arg), prefix);
}

std::vector<std::string> check_complementation(const Complementation& comp) {
    std::vector<std::string> violations;
    if (!comp.base || !comp.extension) return {"complementation missing base or extension"};

    for (const auto& msg : validate(comp.extension))
        violations.push_back("extension: " + msg);
    if (!violations.empty()) return violations;

    if (!is_atomic(comp.conclusion()))
        violations.push_back("conclusion " + to_string(comp.conclusion()) + " is not atomic");

    if (comp.is_identity()) {
        if (!equal(comp.extension->conclusion(), comp.base->conclusion()))
            violations.push_back("identity extension does not match the base conclusion");
        if (!comp.delta.empty()) violations.push_back("identity complementation carries auxiliaries");
        if (!comp.fresh_atoms.empty()) violations.push_back("identity complementation carries fresh atoms");
        return violations;
    }

    auto path = principal_path(comp.extension);
    if (!path) {
        violations.push_back("extension is improper");
        return violations;
    }
    const ArgumentTree& top = node_at(comp.extension, path->front());
    if (!top.is_leaf() || !equal(top.conclusion(), comp.base->conclusion()))
        violations.push_back("principal assumption of the extension is not the base conclusion");

    if (!is_canonical(comp.extension)) violations.push_back("extension is not canonical");
    if (!critical_subarguments(comp.extension).empty())
        violations.push_back("extension has critical subarguments");

    if (degree_of_argument(comp.extension) > degree_of_argument(comp.base))
        violations.push_back("extension degree " + std::to_string(degree_of_argument(comp.extension)) +
                             " exceeds base degree " + std::to_string(degree_of_argument(comp.base)));

    // Recorded auxiliaries must match what the path steps introduce.
    std::vector<FormulaPtr> derived;
    for (const auto& step : comp.path_steps())
        for (const auto& f : step.introduced) derived.push_back(f);
    bool delta_ok = derived.size() == comp.delta.size();
    for (std::size_t i = 0; delta_ok && i < derived.size(); i++)
        delta_ok = equal(derived[i], comp.delta[i]);
    if (!delta_ok) violations.push_back("recorded auxiliaries do not match the extension steps");

    // Per-step freshness: an atom invented at a step must not occur in the
    // base or in auxiliaries introduced before that step.
    std::set<std::string> base_atoms = atoms_of_tree(comp.base);
    std::set<std::string> derived_fresh;
    {
        std::set<std::string> before = base_atoms;
        std::vector<const ArgumentTree*> spine;
        const ArgumentTree* node = comp.extension.get();
        while (!node->is_leaf()) {
            spine.push_back(node);
            node = node->premisses()[*major_position(node->label())].get();
        }
        std::reverse(spine.begin(), spine.end());  // top-down: first-applied first
        for (const ArgumentTree* s : spine) {
            if (s->label() == StepLabel::ImpE) {
                collect_atoms(s->premisses()[0]->conclusion(), before);
            } else if (s->label() == StepLabel::OrE || s->label() == StepLabel::BotE) {
                // Only atomic consequences count as invented atoms.
                if (!is_atomic(s->conclusion())) continue;
                const std::string& c = s->conclusion()->atom_name();
                derived_fresh.insert(c);
                std::set<std::string> context = before;
                if (s->label() == StepLabel::OrE) {
                    const FormulaPtr& major = s->premisses()[0]->conclusion();
                    if (major->kind() == FormulaKind::Disjunction) {
                        collect_atoms(major->left(), context);
                        collect_atoms(major->right(), context);
                    }
                }
                if (context.count(c))
                    violations.push_back("atom " + c + " is not fresh at its introduction");
                before.insert(c);
            }
        }
    }
    std::set<std::string> recorded(comp.fresh_atoms.begin(), comp.fresh_atoms.end());
    if (recorded != derived_fresh)
        violations.push_back("recorded fresh atoms do not match the extension");

    return violations;
}

}  // namespace pragval
