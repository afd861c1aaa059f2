#ifndef PRAGVAL_ORACLE_HPP
#define PRAGVAL_ORACLE_HPP

#include "pragval/formula.hpp"

namespace pragval {

// Decides propositional intuitionistic provability with a contraction-free
// sequent search (G4ip): right rules for -> and & are applied eagerly, the
// left implication rule splits on the shape of the antecedent, and every
// rule decreases a multiset weight, so the search terminates.
bool provable(const std::vector<FormulaPtr>& gamma, const FormulaPtr& goal);
bool provable_from(const FormulaSet& gamma, const FormulaPtr& goal);

struct Sequent {
    std::vector<FormulaPtr> gamma;
    FormulaPtr goal;
};

// "A1, A2 |- G" or just "G".
Sequent parse_sequent(const std::string& text);
std::string to_string(const Sequent& seq);

}  // namespace pragval

#endif
