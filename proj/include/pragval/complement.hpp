#ifndef PRAGVAL_COMPLEMENT_HPP
#define PRAGVAL_COMPLEMENT_HPP

#include <cstdint>
#include <stdexcept>

#include "pragval/argument.hpp"

namespace pragval {

struct SupplyExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic supply of atoms not occurring in a fixed avoid set.
// A value threaded through calls; no global state.
class FreshAtomSupply {
public:
    explicit FreshAtomSupply(std::set<std::string> avoid, std::string prefix = "#c",
                             int limit = -1);
    std::string next();

private:
    std::set<std::string> avoid_;
    std::string prefix_;
    int counter_ = 0;
    int limit_;
};

// One elimination on the extension's principal path, from the complemented
// conclusion down to the atomic conclusion, with the auxiliary assumptions
// that step introduces.
struct CompStep {
    StepLabel label;
    std::vector<FormulaPtr> introduced;
};

// An argument extended below its conclusion by eliminations to an atomic
// conclusion.  For an atomic conclusion the argument is its own
// complementation and the extension is a single leaf.
struct Complementation {
    ArgPtr base;                           // the original argument
    ArgPtr extension;                      // principal assumption = leaf of base's conclusion
    std::vector<FormulaPtr> delta;         // auxiliary assumptions, in introduction order
    std::vector<std::string> fresh_atoms;  // atoms invented by OrE / BotE extension steps

    const FormulaPtr& conclusion() const { return extension->conclusion(); }
    bool is_identity() const { return extension->is_leaf(); }

    // The complete argument: extension with its principal-assumption leaf
    // replaced by the base.
    ArgPtr full() const;

    // Extension steps ordered from the complemented conclusion downward.
    std::vector<CompStep> path_steps() const;

    // Auxiliaries minus those introduced at the given path step.
    FormulaSet delta_star(std::size_t step_index) const;

    std::string serialize(bool pretty = true) const;
    std::uint64_t key() const;  // stable content hash of the serialized form
};

bool complementations_equal(const Complementation& a, const Complementation& b);

// Identity complementation; rejects complex conclusions.
Complementation complement_atomic(const ArgPtr& arg);

// The complementations the completeness extraction queries, one chain per
// conjunct branch: a conjunction extends by both projections, an
// implication assumes its antecedent and continues on the consequent, a
// disjunction ends in OrE onto a fresh atom with assumed arrow premisses,
// absurdity ends in BotE onto a fresh atom, an atom stops.  An atomic
// conclusion yields just the identity complementation.
std::vector<Complementation> proof_case_complementation(const ArgPtr& arg,
                                                        FreshAtomSupply& supply);
std::vector<Complementation> proof_case_complementation(const ArgPtr& arg,
                                                        const std::string& prefix = "#c");

// Deterministic default supply for an argument: avoids every atom that
// occurs anywhere in it.
FreshAtomSupply default_supply(const ArgPtr& arg, const std::string& prefix = "#c");

// Verifies all Complementation invariants: canonical extension with the
// base conclusion as principal assumption, atomic conclusion, the degree
// bound, recorded auxiliaries, and per-step freshness of invented atoms.
std::vector<std::string> check_complementation(const Complementation& comp);

}  // namespace pragval

#endif
