#include "pragval/formula.hpp"

#include <cctype>

namespace pragval {

Formula::Formula(FormulaKind kind, std::string name, FormulaPtr left, FormulaPtr right)
    : kind_(kind), name_(std::move(name)), left_(std::move(left)), right_(std::move(right)) {
    switch (kind_) {
        case FormulaKind::Atom: degree_ = 0; break;
        case FormulaKind::Absurdity: degree_ = 1; break;
        default: degree_ = 1 + left_->degree() + right_->degree(); break;
    }
}

FormulaPtr Formula::atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
    return FormulaPtr(new Formula(FormulaKind::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::absurdity() {
    static const FormulaPtr bot(new Formula(FormulaKind::Absurdity, "", nullptr, nullptr));
    return bot;
}

FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr c) {
    return FormulaPtr(new Formula(FormulaKind::Implication, "", std::move(a), std::move(c)));
}

FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(FormulaKind::Disjunction, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) {
    return FormulaPtr(new Formula(FormulaKind::Conjunction, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::neg(FormulaPtr operand) {
    return implies(std::move(operand), absurdity());
}

const std::string& Formula::atom_name() const {
    if (kind_ != FormulaKind::Atom) throw std::logic_error("atom_name on non-atom");
    return name_;
}

const FormulaPtr& Formula::left() const {
    if (!left_) throw std::logic_error("left on leaf formula");
    return left_;
}

const FormulaPtr& Formula::right() const {
    if (!right_) throw std::logic_error("right on leaf formula");
    return right_;
}

int compare(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case FormulaKind::Atom:
            return a.atom_name().compare(b.atom_name());
        case FormulaKind::Absurdity:
            return 0;
        default: {
            int c = compare(*a.left(), *b.left());
            if (c != 0) return c;
            return compare(*a.right(), *b.right());
        }
    }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    return compare(*a, *b) == 0;
}

bool is_atomic(const FormulaPtr& f) { return f->kind() == FormulaKind::Atom; }

bool contains_atom(const FormulaPtr& f, const std::string& atom) {
    switch (f->kind()) {
        case FormulaKind::Atom: return f->atom_name() == atom;
        case FormulaKind::Absurdity: return false;
        default: return contains_atom(f->left(), atom) || contains_atom(f->right(), atom);
    }
}

bool is_subformula(const FormulaPtr& sub, const FormulaPtr& of) {
    if (equal(sub, of)) return true;
    switch (of->kind()) {
        case FormulaKind::Atom:
        case FormulaKind::Absurdity:
            return false;
        default:
            return is_subformula(sub, of->left()) || is_subformula(sub, of->right());
    }
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
    switch (f->kind()) {
        case FormulaKind::Atom: out.insert(f->atom_name()); break;
        case FormulaKind::Absurdity: break;
        default:
            collect_atoms(f->left(), out);
            collect_atoms(f->right(), out);
            break;
    }
}

namespace {

// Precedence levels: -> 1 (right assoc), | 2, & 3, ~/atoms 4.
void print_rec(std::string& out, const FormulaPtr& f, int min_prec) {
    switch (f->kind()) {
        case FormulaKind::Atom:
            out += f->atom_name();
            return;
        case FormulaKind::Absurdity:
            out += "_|_";
            return;
        case FormulaKind::Implication:
            if (f->right()->kind() == FormulaKind::Absurdity) {
                out += '~';
                print_rec(out, f->left(), 4);
                return;
            }
            if (min_prec > 1) out += '(';
            print_rec(out, f->left(), 2);
            out += " -> ";
            print_rec(out, f->right(), 1);
            if (min_prec > 1) out += ')';
            return;
        case FormulaKind::Disjunction:
            if (min_prec > 2) out += '(';
            print_rec(out, f->left(), 2);
            out += " | ";
            print_rec(out, f->right(), 3);
            if (min_prec > 2) out += ')';
            return;
        case FormulaKind::Conjunction:
            if (min_prec > 3) out += '(';
            print_rec(out, f->left(), 3);
            out += " & ";
            print_rec(out, f->right(), 4);
            if (min_prec > 3) out += ')';
            return;
    }
}

std::string escape_atom_latex(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '#' || c == '_') out += '\\';
        out += c;
    }
    return out;
}

void latex_rec(std::string& out, const FormulaPtr& f, int min_prec) {
    switch (f->kind()) {
        case FormulaKind::Atom:
            out += escape_atom_latex(f->atom_name());
            return;
        case FormulaKind::Absurdity:
            out += "\\bot";
            return;
        case FormulaKind::Implication:
            if (f->right()->kind() == FormulaKind::Absurdity) {
                out += "\\lnot ";
                latex_rec(out, f->left(), 4);
                return;
            }
            if (min_prec > 1) out += '(';
            latex_rec(out, f->left(), 2);
            out += " \\to ";
            latex_rec(out, f->right(), 1);
            if (min_prec > 1) out += ')';
            return;
        case FormulaKind::Disjunction:
            if (min_prec > 2) out += '(';
            latex_rec(out, f->left(), 2);
            out += " \\vee ";
            latex_rec(out, f->right(), 3);
            if (min_prec > 2) out += ')';
            return;
        case FormulaKind::Conjunction:
            if (min_prec > 3) out += '(';
            latex_rec(out, f->left(), 3);
            out += " \\wedge ";
            latex_rec(out, f->right(), 4);
            if (min_prec > 3) out += ')';
            return;
    }
}

struct Lexer {
    enum class Tok { Atom, Bot, Arrow, Or, And, Neg, LParen, RParen, End };

    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    Tok tok = Tok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
        tok_pos = pos_;
        if (pos_ >= text_.size()) { tok = Tok::End; return; }
        char c = text_[pos_];
        if (c == '(') { tok = Tok::LParen; pos_++; return; }
        if (c == ')') { tok = Tok::RParen; pos_++; return; }
        if (c == '~') { tok = Tok::Neg; pos_++; return; }
        if (c == '&') { tok = Tok::And; pos_++; return; }
        if (c == '|') {
            // "_|_" never reaches here ('_' starts an identifier or the bot token below).
            tok = Tok::Or; pos_++; return;
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            tok = Tok::Arrow; pos_ += 2; return;
        }
        if (text_.compare(pos_, 3, "_|_") == 0) { tok = Tok::Bot; pos_ += 3; return; }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '#') {
            std::size_t start = pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'' || d == '#') pos_++;
                else break;
            }
            ident = text_.substr(start, pos_ - start);
            tok = ident == "F" ? Tok::Bot : Tok::Atom;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

struct Parser {
    explicit Parser(const std::string& text) : lex(text) {}
    Lexer lex;

    FormulaPtr imp() {
        FormulaPtr l = disjunction();
        if (lex.tok == Lexer::Tok::Arrow) {
            lex.advance();
            return Formula::implies(std::move(l), imp());
        }
        return l;
    }

    FormulaPtr disjunction() {
        FormulaPtr l = conjunction();
        while (lex.tok == Lexer::Tok::Or) {
            lex.advance();
            l = Formula::disj(std::move(l), conjunction());
        }
        return l;
    }

    FormulaPtr conjunction() {
        FormulaPtr l = unary();
        while (lex.tok == Lexer::Tok::And) {
            lex.advance();
            l = Formula::conj(std::move(l), unary());
        }
        return l;
    }

    FormulaPtr unary() {
        switch (lex.tok) {
            case Lexer::Tok::Neg:
                lex.advance();
                return Formula::neg(unary());
            case Lexer::Tok::Atom: {
                FormulaPtr f = Formula::atom(lex.ident);
                lex.advance();
                return f;
            }
            case Lexer::Tok::Bot:
                lex.advance();
                return Formula::absurdity();
            case Lexer::Tok::LParen: {
                lex.advance();
                FormulaPtr f = imp();
                if (lex.tok != Lexer::Tok::RParen)
                    throw ParseError("expected ')'", lex.tok_pos);
                lex.advance();
                return f;
            }
            default:
                throw ParseError("expected formula", lex.tok_pos);
        }
    }
};

}  // namespace

std::string to_string(const FormulaPtr& f) {
    std::string out;
    print_rec(out, f, 1);
    return out;
}

std::string to_latex(const FormulaPtr& f) {
    std::string out;
    latex_rec(out, f, 1);
    return out;
}

FormulaPtr parse_formula(const std::string& text) {
    Parser p(text);
    FormulaPtr f = p.imp();
    if (p.lex.tok != Lexer::Tok::End)
        throw ParseError("trailing input after formula", p.lex.tok_pos);
    return f;
}

}  // namespace pragval
