#include "pragval/render.hpp"

#include <algorithm>

namespace pragval {

const char* label_display(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft: return "&E_l";
        case StepLabel::AndERight: return "&E_r";
        case StepLabel::ImpE: return "->E";
        case StepLabel::OrE: return "|E";
        case StepLabel::BotE: return "_|_E";
        case StepLabel::AndI: return "&I";
        case StepLabel::OrILeft: return "|I_l";
        case StepLabel::OrIRight: return "|I_r";
        case StepLabel::ImpI: return "->I";
        case StepLabel::Unjustified: return "??";
    }
    return "?";
}

namespace {

struct Box {
    std::vector<std::string> lines;  // top to bottom
    int width = 0;
    int center = 0;  // column of the conclusion's center in the bottom line
};

std::string spaces(int n) { return std::string(static_cast<std::size_t>(std::max(0, n)), ' '); }

Box render_box(const ArgPtr& node) {
    std::string concl = to_string(node->conclusion());
    if (node->is_leaf()) {
        if (node->tag()) concl = "[" + concl + "]^" + *node->tag();
        Box box;
        box.lines = {concl};
        box.width = static_cast<int>(concl.size());
        box.center = box.width / 2;
        return box;
    }

    std::vector<Box> premisses;
    premisses.reserve(node->premisses().size());
    for (const auto& p : node->premisses()) premisses.push_back(render_box(p));

    const int gap = 3;
    int top_height = 0;
    for (const auto& b : premisses) top_height = std::max(top_height, (int)b.lines.size());

    // Bottom-align premiss boxes side by side.
    std::vector<std::string> top(static_cast<std::size_t>(top_height));
    int x = 0;
    for (std::size_t i = 0; i < premisses.size(); i++) {
        const Box& b = premisses[i];
        int offset = top_height - static_cast<int>(b.lines.size());
        for (int row = 0; row < top_height; row++) {
            std::string& line = top[static_cast<std::size_t>(row)];
            line += spaces(x - static_cast<int>(line.size()));
            if (row >= offset) line += b.lines[static_cast<std::size_t>(row - offset)];
        }
        x += b.width + gap;
    }
    int premiss_width = x - gap;

    // Rule line spans the whole premiss block, at least the conclusion width.
    std::string rule_label = label_display(node->label());
    if (node->tag()) rule_label += "^" + *node->tag();
    int concl_width = static_cast<int>(concl.size());
    int bar_width = std::max(premiss_width, concl_width);
    std::string bar = std::string(static_cast<std::size_t>(bar_width), '-') + " " + rule_label;
    int concl_left = (bar_width - concl_width) / 2;
    std::string concl_line = spaces(concl_left) + concl;

    Box box;
    box.lines = std::move(top);
    box.lines.push_back(bar);
    box.lines.push_back(concl_line);
    box.width = 0;
    for (const auto& line : box.lines) box.width = std::max(box.width, (int)line.size());
    box.center = concl_left + concl_width / 2;
    return box;
}

const char* latex_rule_name(StepLabel label) {
    switch (label) {
        case StepLabel::AndELeft:
        case StepLabel::AndERight: return "\\wedge\\mathrm{E}";
        case StepLabel::ImpE: return "\\to\\mathrm{E}";
        case StepLabel::OrE: return "\\vee\\mathrm{E}";
        case StepLabel::BotE: return "\\bot\\mathrm{E}";
        case StepLabel::AndI: return "\\wedge\\mathrm{I}";
        case StepLabel::OrILeft:
        case StepLabel::OrIRight: return "\\vee\\mathrm{I}";
        case StepLabel::ImpI: return "\\to\\mathrm{I}";
        case StepLabel::Unjustified: return "?";
    }
    return "?";
}

void latex_rec(std::string& out, const ArgPtr& node, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node->is_leaf()) {
        out += pad;
        if (node->tag())
            out += "\\discharge{" + to_latex(node->conclusion()) + "}^{" + *node->tag() + "}";
        else
            out += to_latex(node->conclusion());
        return;
    }
    out += pad + "\\infer[" + latex_rule_name(node->label());
    if (node->tag()) out += "^{" + *node->tag() + "}";
    out += "]{" + to_latex(node->conclusion()) + "}{\n";
    for (std::size_t i = 0; i < node->premisses().size(); i++) {
        latex_rec(out, node->premisses()[i], indent + 1);
        if (i + 1 < node->premisses().size()) out += " &";
        out += "\n";
    }
    out += pad + "}";
}

}  // namespace

std::string render_ascii(const ArgPtr& arg) {
    Box box = render_box(arg);
    std::string out;
    for (const auto& line : box.lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_latex(const ArgPtr& arg) {
    std::string out;
    latex_rec(out, arg, 0);
    out += "\n";
    return out;
}

}  // namespace pragval
