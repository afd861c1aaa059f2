#ifndef PRAGVAL_WITNESS_HPP
#define PRAGVAL_WITNESS_HPP

#include "pragval/complement.hpp"

namespace pragval {

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

class ValidityWitness;
using WitnessPtr = std::shared_ptr<const ValidityWitness>;

// A canonical argument together with validity evidence for each of its
// critical subarguments.
struct NarrowlyValidPackage {
    ArgPtr canonical;
    std::vector<std::pair<OccPath, WitnessPtr>> sub_witnesses;  // keyed by critical occurrence

    const WitnessPtr* sub_witness_at(const OccPath& occ) const;
};

// Finite-table responder mapping complementations of an argument to
// narrowly valid packages, with recursively packaged witnesses for critical
// subarguments.  Immutable once built.
class ValidityWitness {
public:
    struct Entry {
        Complementation comp;
        NarrowlyValidPackage package;
    };

    ArgPtr argument;
    std::vector<Entry> entries;  // the declared domain

    // Lookup by stable content key with a structural cross-check.
    const NarrowlyValidPackage* lookup(const Complementation& comp) const;
};

// Checks Def-6 narrow validity: canonical core, every critical subargument
// covered by a sub-witness of strictly smaller degree, sub-witnesses valid
// recursively.
std::vector<std::string> check_narrow_validity(const NarrowlyValidPackage& pkg, int degree_bound,
                                               const std::string& fresh_prefix = "#c");

struct CompVerdict {
    std::uint64_t key = 0;
    std::string conclusion;
    bool ok = false;
    std::vector<std::string> messages;
};

struct ValidityReport {
    bool valid = false;
    std::vector<std::string> messages;     // argument-level problems
    std::vector<CompVerdict> verdicts;     // one per queried complementation

    std::vector<std::string> flatten() const;
};

// Def-8 check over the given complementations: for each one the responder
// must supply a package with the complementation's conclusion, assumptions
// within gamma plus that complementation's auxiliaries (as sets), passing
// check_narrow_validity.
ValidityReport check_validity(const ArgPtr& arg, const ValidityWitness& w,
                              const std::vector<Complementation>& comps,
                              const std::string& fresh_prefix = "#c");
// Same, over the proof-case complementation set of arg.
ValidityReport check_validity(const ArgPtr& arg, const ValidityWitness& w,
                              const std::string& fresh_prefix = "#c");

// Bounded brute-force witness discovery.  Searches canonical elimination
// structures only (no critical subarguments), so absence of a result is not
// a refutation.  Found witnesses pass check_validity on the proof-case set.
std::optional<ValidityWitness> search_witness(const ArgPtr& arg, int depth_bound = 6,
                                              int atom_bound = 64,
                                              const std::string& fresh_prefix = "#c");

// Witness file format: header with the argument, then entries pairing a
// complementation with a package; sub-witnesses nest recursively.
std::string serialize_witness(const ValidityWitness& w, bool pretty = true);
ValidityWitness parse_witness(const std::string& text);

}  // namespace pragval

#endif
