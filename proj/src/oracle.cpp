#include "pragval/oracle.hpp"

#include <algorithm>

namespace pragval {

namespace {

// Contexts are kept duplicate-free; contraction is not needed in G4ip and
// dropping duplicates only prunes the search.
struct Context {
    std::vector<FormulaPtr> items;

    bool contains(const FormulaPtr& f) const {
        return std::any_of(items.begin(), items.end(),
                           [&](const FormulaPtr& g) { return equal(f, g); });
    }

    void insert(const FormulaPtr& f) {
        if (!contains(f)) items.push_back(f);
    }

    void erase_at(std::size_t i) { items.erase(items.begin() + static_cast<long>(i)); }
};

bool search(Context ctx, const FormulaPtr& goal);

bool search_right(Context& ctx, const FormulaPtr& goal) {
    switch (goal->kind()) {
        case FormulaKind::Conjunction:
            return search(ctx, goal->left()) && search(ctx, goal->right());
        case FormulaKind::Implication: {
            Context next = ctx;
            next.insert(goal->left());
            return search(std::move(next), goal->right());
        }
        default:
            return false;  // handled after saturation
    }
}

bool search(Context ctx, const FormulaPtr& goal) {
    if (goal->kind() == FormulaKind::Conjunction || goal->kind() == FormulaKind::Implication)
        return search_right(ctx, goal);

    // Saturate the non-branching invertible left rules.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ctx.items.size() && !changed; i++) {
            const FormulaPtr f = ctx.items[i];
            switch (f->kind()) {
                case FormulaKind::Absurdity:
                    return true;
                case FormulaKind::Conjunction:
                    ctx.erase_at(i);
                    ctx.insert(f->left());
                    ctx.insert(f->right());
                    changed = true;
                    break;
                case FormulaKind::Implication: {
                    const FormulaPtr& ant = f->left();
                    switch (ant->kind()) {
                        case FormulaKind::Atom:
                            if (ctx.contains(ant)) {
                                ctx.erase_at(i);
                                ctx.insert(f->right());
                                changed = true;
                            }
                            break;
                        case FormulaKind::Absurdity:
                            ctx.erase_at(i);
                            changed = true;
                            break;
                        case FormulaKind::Conjunction:
                            ctx.erase_at(i);
                            ctx.insert(Formula::implies(ant->left(),
                                                        Formula::implies(ant->right(), f->right())));
                            changed = true;
                            break;
                        case FormulaKind::Disjunction:
                            ctx.erase_at(i);
                            ctx.insert(Formula::implies(ant->left(), f->right()));
                            ctx.insert(Formula::implies(ant->right(), f->right()));
                            changed = true;
                            break;
                        case FormulaKind::Implication:
                            break;  // non-invertible, handled below
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }

    if (goal->kind() == FormulaKind::Atom && ctx.contains(goal)) return true;

    // Left disjunction: invertible but branching.
    for (std::size_t i = 0; i < ctx.items.size(); i++) {
        const FormulaPtr f = ctx.items[i];
        if (f->kind() != FormulaKind::Disjunction) continue;
        Context left = ctx;
        left.erase_at(i);
        Context right = left;
        left.insert(f->left());
        right.insert(f->right());
        return search(std::move(left), goal) && search(std::move(right), goal);
    }

    if (goal->kind() == FormulaKind::Disjunction) {
        if (search(ctx, goal->left()) || search(ctx, goal->right())) return true;
    }

    // Left nested implication (C -> D) -> B.
    for (std::size_t i = 0; i < ctx.items.size(); i++) {
        const FormulaPtr f = ctx.items[i];
        if (f->kind() != FormulaKind::Implication ||
            f->left()->kind() != FormulaKind::Implication)
            continue;
        Context premiss = ctx;
        premiss.erase_at(i);
        Context rest = premiss;
        premiss.insert(Formula::implies(f->left()->right(), f->right()));
        rest.insert(f->right());
        if (search(std::move(premiss), f->left()) && search(std::move(rest), goal)) return true;
    }

    return false;
}

}  // namespace

bool provable(const std::vector<FormulaPtr>& gamma, const FormulaPtr& goal) {
    Context ctx;
    for (const auto& f : gamma) ctx.insert(f);
    return search(std::move(ctx), goal);
}

bool provable_from(const FormulaSet& gamma, const FormulaPtr& goal) {
    return provable(std::vector<FormulaPtr>(gamma.begin(), gamma.end()), goal);
}

Sequent parse_sequent(const std::string& text) {
    Sequent seq;
    std::size_t turnstile = text.find("|-");
    std::string left, right;
    if (turnstile == std::string::npos) {
        right = text;
    } else {
        left = text.substr(0, turnstile);
        right = text.substr(turnstile + 2);
    }
    std::size_t pos = 0;
    while (pos < left.size()) {
        std::size_t comma = left.find(',', pos);
        std::string part = left.substr(pos, comma == std::string::npos ? comma : comma - pos);
        bool blank = part.find_first_not_of(" \t\n") == std::string::npos;
        if (!blank) seq.gamma.push_back(parse_formula(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    seq.goal = parse_formula(right);
    return seq;
}

std::string to_string(const Sequent& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.gamma.size(); i++) {
        if (i) out += ", ";
        out += to_string(seq.gamma[i]);
    }
    if (!out.empty()) out += ' ';
    out += "|- " + to_string(seq.goal);
    return out;
}

}  // namespace pragval
