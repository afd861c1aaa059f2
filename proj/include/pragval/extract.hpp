#ifndef PRAGVAL_EXTRACT_HPP
#define PRAGVAL_EXTRACT_HPP

#include "pragval/ndcalc.hpp"
#include "pragval/witness.hpp"

namespace pragval {

struct ExtractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Replace each critical subargument of the package's canonical core by the
// derivation extracted from its sub-witness.  Open assumptions of a spliced
// derivation that match an enclosing discharge are re-bound to it, and an
// OrE left without a discharged case assumption collapses to the
// independent vertical.  Requires check_narrow_validity(pkg, ...) clean.
ArgPtr splice_critical(const NarrowlyValidPackage& pkg, int fuel = 100000);

// From a derivation of a fresh atomic conclusion, recover the derivation of
// absurdity it must contain: the premiss of a final BotE, or the BotE/OrE
// structure rebuilt with absurdity as conclusion.
ArgPtr invert_bot(const ArgPtr& d);

// From a derivation of fresh atomic c out of gamma plus {a -> c, b -> c},
// build a derivation of a | b free of those arrow assumptions: BotE retargets,
// OrE recurses into the verticals, ImpE from an arrow premiss turns into the
// matching OrI; the result is normalized and must no longer assume a -> c
// or b -> c.
ArgPtr invert_or(const ArgPtr& d, const FormulaPtr& a, const FormulaPtr& b,
                 const FormulaPtr& c_atom, int fuel = 100000);

ArgPtr invert_and(const ArgPtr& d_left, const ArgPtr& d_right);

// Close off an assumed antecedent with ImpI; vacuous when the antecedent is
// unused.
ArgPtr invert_imp(const ArgPtr& d, const FormulaPtr& antecedent);

struct ExtractionResult {
    ArgPtr derivation;
    std::vector<std::string> report;  // key: value lines
};

// The completeness transformation: from a validity witness for the argument
// to an NJ derivation of its conclusion from at most its assumptions.
ExtractionResult extract(const ArgPtr& arg, const ValidityWitness& w, int fuel = 100000,
                         const std::string& fresh_prefix = "#c");

}  // namespace pragval

#endif
