#ifndef PRAGVAL_TESTS_BRUTEFORCE_HPP
#define PRAGVAL_TESTS_BRUTEFORCE_HPP

#include <algorithm>

#include "pragval/argument.hpp"

// Direct transcriptions of the structural definitions, written against an
// explicit enumeration of occurrences and downward paths rather than the
// library's spine walks.  Deliberately independent of the implementations
// they cross-check; the premiss-role table is restated here by hand.

namespace pragval::bruteforce {

// For each elimination label: index of the premiss carrying the eliminated
// constant, indices of horizontal minors, indices of vertical minors.
struct Roles {
    int major = -1;
    std::vector<int> horizontal;
    std::vector<int> vertical;
};

inline Roles roles_of(StepLabel l) {
    switch (l) {
        case StepLabel::AndELeft: return {0, {}, {}};
        case StepLabel::AndERight: return {0, {}, {}};
        case StepLabel::BotE: return {0, {}, {}};
        case StepLabel::ImpE: return {1, {0}, {}};
        case StepLabel::OrE: return {0, {}, {1, 2}};
        default: return {};  // introductions and unjustified steps
    }
}

inline std::vector<OccPath> all_occurrences(const ArgPtr& arg) {
    std::vector<OccPath> out;
    for_each_occurrence(arg, [&](const OccPath& occ, const ArgumentTree&) { out.push_back(occ); });
    return out;
}

// The downward path from occ to the root, occ first, root last.
inline std::vector<OccPath> downward_path(const OccPath& occ) {
    std::vector<OccPath> out;
    OccPath cur = occ;
    while (true) {
        out.push_back(cur);
        if (cur.empty()) break;
        cur.pop_back();
    }
    return out;
}

inline bool is_major_premiss_of_elimination(const ArgPtr& arg, const OccPath& occ) {
    if (occ.empty()) return false;
    OccPath parent(occ.begin(), occ.end() - 1);
    const ArgumentTree& step = node_at(arg, parent);
    return roles_of(step.label()).major == occ.back();
}

inline bool is_horizontal_minor(const ArgPtr& arg, const OccPath& occ) {
    if (occ.empty()) return false;
    OccPath parent(occ.begin(), occ.end() - 1);
    const Roles roles = roles_of(node_at(arg, parent).label());
    return std::find(roles.horizontal.begin(), roles.horizontal.end(), occ.back()) !=
           roles.horizontal.end();
}

inline bool is_vertical_minor(const ArgPtr& arg, const OccPath& occ) {
    if (occ.empty()) return false;
    OccPath parent(occ.begin(), occ.end() - 1);
    const Roles roles = roles_of(node_at(arg, parent).label());
    return std::find(roles.vertical.begin(), roles.vertical.end(), occ.back()) !=
           roles.vertical.end();
}

// Principal: the major premiss of an elimination and
// the same holds for everything on the path down to (excluding) the
// conclusion.
inline bool principal(const ArgPtr& arg, const OccPath& occ) {
    for (const OccPath& o : downward_path(occ)) {
        if (o.empty()) continue;  // the conclusion is not a premiss
        if (!is_major_premiss_of_elimination(arg, o)) return false;
    }
    return !occ.empty();
}

inline bool leaf_open_bf(const ArgPtr& arg, const OccPath& occ) {
    const ArgumentTree& node = node_at(arg, occ);
    if (!node.tag()) return true;
    for (const OccPath& o : downward_path(occ)) {
        if (o == occ) continue;
        const ArgumentTree& anc = node_at(arg, o);
        if (!anc.is_leaf() && anc.tag() && *anc.tag() == *node.tag()) return false;
    }
    return true;
}

// Proper: some open assumption is principal; a single occurrence counts.
inline bool proper(const ArgPtr& arg) {
    if (arg->is_leaf()) return true;
    for (const OccPath& occ : all_occurrences(arg)) {
        const ArgumentTree& node = node_at(arg, occ);
        if (!node.is_leaf()) continue;
        if (!leaf_open_bf(arg, occ)) continue;
        if (principal(arg, occ)) return true;
    }
    return false;
}

// Placid: no horizontal minor premiss on the way down.
inline bool placid(const ArgPtr& arg, const OccPath& occ) {
    for (const OccPath& o : downward_path(occ))
        if (is_horizontal_minor(arg, o)) return false;
    return true;
}

// Canonical: proper with proper subarguments at placid verticals.
inline bool canonical(const ArgPtr& arg) {
    if (!proper(arg)) return false;
    for (const OccPath& occ : all_occurrences(arg)) {
        if (!is_vertical_minor(arg, occ)) continue;
        if (!placid(arg, occ)) continue;
        if (!proper(subtree_at(arg, occ))) return false;
    }
    return true;
}

// Critical subarguments, maximal ones only.
inline std::vector<OccPath> criticals(const ArgPtr& arg) {
    std::vector<OccPath> all;
    for (const OccPath& occ : all_occurrences(arg)) {
        if (!is_horizontal_minor(arg, occ)) continue;
        if (canonical(subtree_at(arg, occ))) continue;
        all.push_back(occ);
    }
    std::vector<OccPath> maximal;
    for (const OccPath& occ : all) {
        bool inside_other = false;
        for (const OccPath& other : all) {
            if (other.size() < occ.size() &&
                std::equal(other.begin(), other.end(), occ.begin()))
                inside_other = true;
        }
        if (!inside_other) maximal.push_back(occ);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace pragval::bruteforce

#endif
