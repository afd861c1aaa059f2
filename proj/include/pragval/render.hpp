#ifndef PRAGVAL_RENDER_HPP
#define PRAGVAL_RENDER_HPP

#include "pragval/argument.hpp"

namespace pragval {

// Stacked proof tree with inference lines, premisses side by side.
std::string render_ascii(const ArgPtr& arg);

// Nested \infer display in the usual proofs.sty style.
std::string render_latex(const ArgPtr& arg);

// Short rule names for display ("&E_l", "->I", ...).
const char* label_display(StepLabel label);

}  // namespace pragval

#endif
