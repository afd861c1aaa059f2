#ifndef PRAGVAL_TREEIO_HPP
#define PRAGVAL_TREEIO_HPP

#include <string>

#include "pragval/argument.hpp"

namespace pragval {

// Textual argument format:
//   (assume FORMULA [tag TAG])
//   (step LABEL [discharges TAG] (concl FORMULA) PREMISS...)
// Formula text is written inline; parentheses inside formulas nest freely.

std::string serialize_argument(const ArgPtr& arg, bool pretty = true);
ArgPtr parse_argument(const std::string& text);

// Generic s-expression support shared with the witness format.
struct Sexp {
    bool is_list = false;
    std::string token;            // when !is_list
    std::vector<Sexp> items;      // when is_list
    std::size_t position = 0;     // offset in the source text

    const Sexp& at(std::size_t i) const;
    bool head_is(const std::string& word) const;
};

Sexp parse_sexp(const std::string& text);
std::vector<Sexp> parse_sexp_list(const std::string& text);
std::string flatten_tokens(const Sexp& group, std::size_t from, std::size_t to);
ArgPtr argument_from_sexp(const Sexp& s);

}  // namespace pragval

#endif
