#include "pragval/treeio.hpp"

#include <cctype>

namespace pragval {

namespace {

void serialize_rec(std::string& out, const ArgPtr& node, int indent, bool pretty) {
    auto pad = [&](int n) {
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(n) * 2, ' ');
        } else if (!out.empty() && out.back() != '(') {
            out += ' ';
        }
    };
    if (indent > 0) pad(indent);
    if (node->is_leaf()) {
        out += "(assume " + to_string(node->conclusion());
        if (node->tag()) out += " tag " + *node->tag();
        out += ')';
        return;
    }
    out += "(step ";
    out += label_name(node->label());
    if (node->tag()) out += " discharges " + *node->tag();
    out += " (concl " + to_string(node->conclusion()) + ")";
    for (const auto& p : node->premisses()) serialize_rec(out, p, indent + 1, pretty);
    out += ')';
}

struct SexpParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) { pos++; continue; }
            if (text[pos] == ';') {  // comment to end of line
                while (pos < text.size() && text[pos] != '\n') pos++;
                continue;
            }
            break;
        }
    }

    Sexp parse() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        Sexp s;
        s.position = pos;
        if (text[pos] == '(') {
            pos++;
            s.is_list = true;
            while (true) {
                skip_ws();
                if (pos >= text.size()) throw ParseError("unterminated '('", s.position);
                if (text[pos] == ')') { pos++; break; }
                s.items.push_back(parse());
            }
            return s;
        }
        if (text[pos] == ')') throw ParseError("unexpected ')'", pos);
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')' && text[pos] != ';')
            pos++;
        s.token = text.substr(start, pos - start);
        return s;
    }
};

void flatten_rec(std::string& out, const Sexp& s) {
    if (!s.is_list) {
        if (!out.empty() && out.back() != '(') out += ' ';
        out += s.token;
        return;
    }
    if (!out.empty() && out.back() != '(') out += ' ';
    out += '(';
    for (const auto& item : s.items) flatten_rec(out, item);
    out += ')';
}

}  // namespace

const Sexp& Sexp::at(std::size_t i) const {
    if (!is_list || i >= items.size())
        throw ParseError("malformed expression: missing element " + std::to_string(i), position);
    return items[i];
}

bool Sexp::head_is(const std::string& word) const {
    return is_list && !items.empty() && !items[0].is_list && items[0].token == word;
}

Sexp parse_sexp(const std::string& text) {
    SexpParser p{text};
    Sexp s = p.parse();
    p.skip_ws();
    if (p.pos < text.size()) throw ParseError("trailing input after expression", p.pos);
    return s;
}

std::vector<Sexp> parse_sexp_list(const std::string& text) {
    SexpParser p{text};
    std::vector<Sexp> out;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        out.push_back(p.parse());
    }
    return out;
}

std::string flatten_tokens(const Sexp& group, std::size_t from, std::size_t to) {
    std::string out;
    for (std::size_t i = from; i < to && i < group.items.size(); i++)
        flatten_rec(out, group.items[i]);
    return out;
}

ArgPtr argument_from_sexp(const Sexp& s) {
    if (!s.is_list || s.items.empty())
        throw ParseError("expected (assume ...) or (step ...)", s.position);
    if (s.head_is("assume")) {
        std::size_t end = s.items.size();
        std::optional<std::string> tag;
        if (end >= 3 && !s.items[end - 2].is_list && s.items[end - 2].token == "tag" &&
            !s.items[end - 1].is_list) {
            tag = s.items[end - 1].token;
            end -= 2;
        }
        if (end < 2) throw ParseError("assume requires a formula", s.position);
        FormulaPtr f = parse_formula(flatten_tokens(s, 1, end));
        return ArgumentTree::leaf(std::move(f), std::move(tag));
    }
    if (s.head_is("step")) {
        const Sexp& label_tok = s.at(1);
        if (label_tok.is_list) throw ParseError("step requires a label", label_tok.position);
        auto label = label_from_name(label_tok.token);
        if (!label) throw ParseError("unknown step label '" + label_tok.token + "'", label_tok.position);
        std::size_t idx = 2;
        std::optional<std::string> tag;
        if (idx < s.items.size() && !s.items[idx].is_list && s.items[idx].token == "discharges") {
            const Sexp& t = s.at(idx + 1);
            if (t.is_list) throw ParseError("discharges requires a tag", t.position);
            tag = t.token;
            idx += 2;
        }
        const Sexp& concl = s.at(idx);
        if (!concl.head_is("concl"))
            throw ParseError("expected (concl FORMULA)", concl.position);
        FormulaPtr f = parse_formula(flatten_tokens(concl, 1, concl.items.size()));
        idx++;
        std::vector<ArgPtr> prem;
        for (; idx < s.items.size(); idx++) prem.push_back(argument_from_sexp(s.items[idx]));
        try {
            return ArgumentTree::step(*label, std::move(f), std::move(prem), std::move(tag));
        } catch (const InvalidArgumentTree& e) {
            throw ParseError(e.what(), s.position);
        }
    }
    throw ParseError("expected (assume ...) or (step ...)", s.position);
}

std::string serialize_argument(const ArgPtr& arg, bool pretty) {
    std::string out;
    serialize_rec(out, arg, 0, pretty);
    return out;
}

ArgPtr parse_argument(const std::string& text) {
    return argument_from_sexp(parse_sexp(text));
}

}  // namespace pragval
