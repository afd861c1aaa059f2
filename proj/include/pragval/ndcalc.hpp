#ifndef PRAGVAL_NDCALC_HPP
#define PRAGVAL_NDCALC_HPP

#include "pragval/argument.hpp"

namespace pragval {

// A Derivation is an ArgumentTree every step of which instantiates an NJ
// rule; check_nj is the gate.

struct NjViolation {
    OccPath occ;
    std::string message;
};

// Rule-schema and discharge-pattern check.  Includes the general
// well-formedness violations from validate().  Empty result means the tree
// is an NJ derivation.  Vacuously discharging OrE is rejected.
std::vector<NjViolation> check_nj(const ArgPtr& arg);
bool is_derivation(const ArgPtr& arg);

// No occurrence is both the consequence of an introduction (or BotE, or
// OrE) and the major premiss of an elimination.
bool is_normal(const ArgPtr& d);

struct FuelExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizeResult {
    ArgPtr derivation;
    int steps = 0;
};

// Reduce to normal form: detour contractions for &, |, ->, permutative
// conversions moving eliminations above OrE, BotE collapses, and removal of
// OrE steps left without a discharged case assumption.  Deterministic
// leftmost-innermost strategy; discharge tags are renamed canonically so
// the result is reproducible.  Requires check_nj(d) empty.
NormalizeResult normalize(const ArgPtr& d, int fuel = 100000);

// Rename discharge tags to prefix0, prefix1, ... in preorder; bound leaves
// follow their binder.  The counter threads across calls so successive
// renames stay disjoint.
ArgPtr rename_discharge_tags(const ArgPtr& arg, int& counter, const std::string& prefix = "d");

}  // namespace pragval

#endif
