#ifndef PRAGVAL_FORMULA_HPP
#define PRAGVAL_FORMULA_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pragval {

// Propositional sentences over ->, |, &, _|_.  Negation is not a
// constructor: ~A is stored as A -> _|_.
enum class FormulaKind { Atom, Absurdity, Implication, Disjunction, Conjunction };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    static FormulaPtr atom(std::string name);
    static FormulaPtr absurdity();
    static FormulaPtr implies(FormulaPtr antecedent, FormulaPtr consequent);
    static FormulaPtr disj(FormulaPtr left, FormulaPtr right);
    static FormulaPtr conj(FormulaPtr left, FormulaPtr right);
    static FormulaPtr neg(FormulaPtr operand);  // operand -> _|_

    FormulaKind kind() const { return kind_; }
    const std::string& atom_name() const;
    const FormulaPtr& left() const;   // antecedent for ->
    const FormulaPtr& right() const;  // consequent for ->

    // Number of logical constant occurrences (->, |, &, _|_).
    int degree() const { return degree_; }

private:
    Formula(FormulaKind kind, std::string name, FormulaPtr left, FormulaPtr right);

    FormulaKind kind_;
    std::string name_;
    FormulaPtr left_;
    FormulaPtr right_;
    int degree_;
};

// Structural comparison; a strict weak order usable as a set key.
int compare(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
        return compare(*a, *b) < 0;
    }
};
using FormulaSet = std::set<FormulaPtr, FormulaLess>;
using FormulaMultiset = std::multiset<FormulaPtr, FormulaLess>;

bool is_atomic(const FormulaPtr& f);                       // Atom kind only
bool contains_atom(const FormulaPtr& f, const std::string& atom);
bool is_subformula(const FormulaPtr& sub, const FormulaPtr& of);
void collect_atoms(const FormulaPtr& f, std::set<std::string>& out);

// Minimal-parenthesis text form; parse(to_string(f)) reproduces f.
// Implications into _|_ print as ~A.
std::string to_string(const FormulaPtr& f);
std::string to_latex(const FormulaPtr& f);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Grammar: formula := imp; imp := or ("->" imp)?; or := and ("|" and)*;
// and := unary ("&" unary)*; unary := "~" unary | atom | "_|_" | "F" | "(" formula ")".
FormulaPtr parse_formula(const std::string& text);

}  // namespace pragval

#endif
