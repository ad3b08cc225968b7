#include "clp/lang.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace clp {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

Formula Formula::make_term(Term t) {
    Formula f;
    f.kind = Kind::Term;
    f.term = std::move(t);
    return f;
}

Formula Formula::make_lit(Literal l) {
    Formula f;
    f.kind = Kind::Lit;
    f.lit = std::move(l);
    return f;
}

Formula Formula::conj(std::vector<Formula> fs) {
    if (fs.size() == 1) return fs[0];
    Formula f;
    f.kind = Kind::And;
    f.kids = std::move(fs);
    return f;
}

Formula Formula::disj(std::vector<Formula> fs) {
    if (fs.size() == 1) return fs[0];
    Formula f;
    f.kind = Kind::Or;
    f.kids = std::move(fs);
    return f;
}

Formula Formula::neg(Formula f) {
    Formula g;
    g.kind = Kind::Not;
    g.kids.push_back(std::move(f));
    return g;
}

namespace {

bool term_eq(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.label != b.label || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!term_eq(a.args[i], b.args[i])) return false;
    }
    return true;
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Term: return term_eq(term, other.term);
        case Kind::Lit: return lit == other.lit;
        default: return kids == other.kids;
    }
}

bool Rule::operator==(const Rule& other) const {
    return label == other.label && head == other.head && body == other.body;
}

std::set<Atom> Program::atoms() const {
    std::set<Atom> out;
    auto visit = [&](auto&& self, const Formula& f) -> void {
        if (f.kind == Formula::Kind::Lit) out.insert(f.lit.atom);
        for (const auto& k : f.kids) self(self, k);
    };
    for (const auto& r : rules) {
        if (r.head) out.insert(*r.head);
        visit(visit, r.body);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------
// Lexer

enum class Tok {
    Ident,   // identifier, or "0"/"1"
    Colon,
    Arrow,   // :-
    Dot,     // '.' (rule end, or application inside parentheses)
    MidDot,  // UTF-8 middle dot, always application
    Comma,
    Semi,
    Plus,
    Star,
    LParen,
    RParen,
    LBrace,
    RBrace,
    KwNot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string text) {
        out.push_back({k, std::move(text), line, col});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '%') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            std::string word = src.substr(start, i - start);
            push(word == "not" ? Tok::KwNot : Tok::Ident, word);
            col += static_cast<int>(i - start);
            continue;
        }
        if (c == ':' && i + 1 < src.size() && src[i + 1] == '-') {
            push(Tok::Arrow, ":-");
            i += 2;
            col += 2;
            continue;
        }
        if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < src.size() &&
            static_cast<unsigned char>(src[i + 1]) == 0xB7) {
            push(Tok::MidDot, "·");
            i += 2;
            ++col;
            continue;
        }
        Tok k;
        switch (c) {
            case ':': k = Tok::Colon; break;
            case '.': k = Tok::Dot; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            case '+': k = Tok::Plus; break;
            case '*': k = Tok::Star; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        push(k, std::string(1, c));
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// ---------------------------------------------------------------------
// Parser
//
// The grammar reuses '.' for rule termination and term application. The
// resolution here: '.' acts as the application operator only inside
// parentheses; elsewhere use the middle dot, which works at any depth.

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    Program parse_program(DefaultLabel dflt) {
        Program p;
        while (peek().kind != Tok::End) p.rules.push_back(parse_rule(dflt));
        for (const auto& r : p.rules) {
            if (r.label && r.head && r.body == Formula::truth())
                p.declared_fact_labels.insert(*r.label);
        }
        return p;
    }

    Formula parse_single_formula() {
        Formula f = parse_formula(0);
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return toks_[std::min(i, toks_.size() - 1)];
    }

    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + ", got '" + peek().text + "'",
                             peek().line, peek().col);
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, peek().line, peek().col);
    }

    Rule parse_rule(DefaultLabel dflt) {
        Rule r;
        bool labelled = false;
        if (peek().kind == Tok::Ident) {
            // Look past a possible atom-shaped name for a ':'.
            std::size_t save = pos_;
            std::string name = parse_atom_name();
            if (peek().kind == Tok::Colon) {
                ++pos_;
                labelled = true;
                if (name != "1") {
                    check_label_or(name);
                    r.label = name;
                }
            } else {
                pos_ = save;
            }
        }
        if (peek().kind == Tok::Ident) {
            std::string head = parse_atom_name();
            if (head == "0" || head == "1") fail("reserved name as head atom");
            r.head = head;
        }
        if (peek().kind == Tok::Arrow) {
            ++pos_;
            r.body = parse_formula(0);
        } else if (!r.head) {
            fail("expected head atom or ':-'");
        }
        expect(Tok::Dot, "'.'");
        if (!labelled && r.head && dflt == DefaultLabel::Head) r.label = *r.head;
        return r;
    }

    void check_label_or(const std::string& name) {
        if (name == "0") throw ParseError("reserved label '0'", peek().line, peek().col);
    }

    // IDENT with an optional argument tuple folded into the name.
    std::string parse_atom_name() {
        Token t = next();
        if (t.kind != Tok::Ident)
            throw ParseError("expected identifier, got '" + t.text + "'", t.line, t.col);
        if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
            (peek(2).kind == Tok::Comma || peek(2).kind == Tok::RParen)) {
            ++pos_;
            std::string name = t.text + "(";
            while (true) {
                Token arg = next();
                if (arg.kind != Tok::Ident)
                    throw ParseError("expected argument identifier", arg.line, arg.col);
                name += arg.text;
                if (peek().kind == Tok::Comma) {
                    ++pos_;
                    name += ",";
                    continue;
                }
                expect(Tok::RParen, "')'");
                return name + ")";
            }
        }
        return t.text;
    }

    Formula parse_formula(int depth) {
        std::vector<Formula> disjuncts{parse_conj(depth)};
        while (peek().kind == Tok::Semi) {
            ++pos_;
            disjuncts.push_back(parse_conj(depth));
        }
        return Formula::disj(std::move(disjuncts));
    }

    Formula parse_conj(int depth) {
        std::vector<Formula> lits{parse_lit(depth)};
        while (peek().kind == Tok::Comma) {
            ++pos_;
            lits.push_back(parse_lit(depth));
        }
        // A one-element conjunction stays a plain formula; truth() is
        // only reachable as an absent body.
        return Formula::conj(std::move(lits));
    }

    bool at_term_op(int depth) const {
        Tok k = peek().kind;
        return k == Tok::Plus || k == Tok::Star || k == Tok::MidDot ||
               (k == Tok::Dot && depth > 0);
    }

    Formula parse_lit(int depth) {
        const Token& t = peek();
        if (t.kind == Tok::KwNot) {
            ++pos_;
            return Formula::neg(parse_lit(depth));
        }
        if (t.kind == Tok::LParen) {
            ++pos_;
            Formula f = parse_formula(depth + 1);
            expect(Tok::RParen, "')'");
            if (at_term_op(depth)) return Formula::make_term(continue_term(to_term(f), depth));
            return f;
        }
        if (t.kind != Tok::Ident) fail("expected literal");
        if ((t.text == "nec" || t.text == "cont" || t.text == "suff") &&
            peek(1).kind == Tok::LParen && peek(2).kind == Tok::LBrace) {
            return parse_causal_lit();
        }
        std::string name = parse_atom_name();
        if (name == "0" || name == "1" || at_term_op(depth)) {
            Term lhs = name == "0"   ? Term::zero()
                       : name == "1" ? Term::one()
                                     : Term::make_label(name);
            return Formula::make_term(continue_term(std::move(lhs), depth));
        }
        return Formula::make_lit(Literal{QuerySpec::one(), name});
    }

    // A parenthesized single term or bare atom followed by a term
    // operator is re-read as the start of a term expression.
    Term to_term(const Formula& f) {
        if (f.kind == Formula::Kind::Term) return f.term;
        if (f.kind == Formula::Kind::Lit && f.lit.query.kind == QuerySpec::Kind::One)
            return Term::make_label(f.lit.atom);
        fail("formula used as a term operand");
    }

    Formula parse_causal_lit() {
        std::string kind = next().text;
        expect(Tok::LParen, "'('");
        expect(Tok::LBrace, "'{'");
        std::set<std::string> labels;
        if (peek().kind != Tok::RBrace) {
            while (true) {
                labels.insert(parse_atom_name());
                if (peek().kind == Tok::Comma) {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(Tok::RBrace, "'}'");
        expect(Tok::Comma, "','");
        std::string atom = parse_atom_name();
        expect(Tok::RParen, "')'");
        QuerySpec q = kind == "nec"    ? QuerySpec::nec(std::move(labels))
                      : kind == "cont" ? QuerySpec::cont(std::move(labels))
                                       : QuerySpec::suff(std::move(labels));
        return Formula::make_lit(Literal{std::move(q), std::move(atom)});
    }

    // Term expressions inside bodies, precedence '.' > '*' > '+'.
    Term continue_term(Term lhs, int depth) {
        lhs = term_apply_tail(std::move(lhs), depth);
        lhs = term_product_tail(std::move(lhs), depth);
        return term_sum_tail(std::move(lhs), depth);
    }

    Term term_sum_tail(Term lhs, int depth) {
        std::vector<Term> args{std::move(lhs)};
        while (peek().kind == Tok::Plus) {
            ++pos_;
            Term t = term_apply_tail(term_primary(depth), depth);
            args.push_back(term_product_tail(std::move(t), depth));
        }
        return args.size() == 1 ? args[0] : Term::sum(std::move(args));
    }

    Term term_product_tail(Term lhs, int depth) {
        std::vector<Term> args{std::move(lhs)};
        while (peek().kind == Tok::Star) {
            ++pos_;
            args.push_back(term_apply_tail(term_primary(depth), depth));
        }
        return args.size() == 1 ? args[0] : Term::product(std::move(args));
    }

    Term term_apply_tail(Term lhs, int depth) {
        while (peek().kind == Tok::MidDot || (peek().kind == Tok::Dot && depth > 0)) {
            ++pos_;
            lhs = Term::apply(std::move(lhs), term_primary(depth));
        }
        return lhs;
    }

    Term term_primary(int depth) {
        if (peek().kind == Tok::LParen) {
            ++pos_;
            Term t = continue_term(term_primary(depth + 1), depth + 1);
            expect(Tok::RParen, "')'");
            return t;
        }
        if (peek().kind != Tok::Ident) fail("expected term");
        std::string name = parse_atom_name();
        if (name == "0") return Term::zero();
        if (name == "1") return Term::one();
        return Term::make_label(name);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(const std::string& src, DefaultLabel dflt) {
    return Parser(src).parse_program(dflt);
}

Formula parse_formula_text(const std::string& src) {
    // Query strings allow '.' as application at any depth; lean on the
    // middle-dot path by treating the whole string as parenthesized.
    return Parser("(" + src + ")").parse_single_formula();
}

// -----------------------------------------------------------------------
// Printing

std::string print_term(const Term& t) {
    auto wrap = [](const Term& child, int parent_prec) {
        int prec = 0;
        switch (child.kind) {
            case Term::Kind::Sum: prec = 1; break;
            case Term::Kind::Product: prec = 2; break;
            case Term::Kind::Apply: prec = 3; break;
            default: prec = 4;
        }
        std::string s = print_term(child);
        return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (t.kind) {
        case Term::Kind::Label: return t.label;
        case Term::Kind::One: return "1";
        case Term::Kind::Zero: return "0";
        case Term::Kind::Sum: {
            if (t.args.empty()) return "0";
            std::string out;
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                if (i) out += " + ";
                out += wrap(t.args[i], 1);
            }
            return out;
        }
        case Term::Kind::Product: {
            if (t.args.empty()) return "1";
            std::string out;
            for (std::size_t i = 0; i < t.args.size(); ++i) {
                if (i) out += "*";
                out += wrap(t.args[i], 2);
            }
            return out;
        }
        case Term::Kind::Apply:
            // Left-associative chains print flat.
            return wrap(t.args[0], 3) + "·" + wrap(t.args[1], 4);
    }
    return "?";
}

namespace {

std::string query_set_text(const std::set<std::string>& labels) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : labels) {
        if (!first) out += ",";
        out += l;
        first = false;
    }
    return out + "}";
}

std::string print_formula_prec(const Formula& f, int parent) {
    // Precedence: Or 1, And 2, Not/leaf 3.
    switch (f.kind) {
        case Formula::Kind::Term: {
            std::string s = print_term(f.term);
            bool atomic = f.term.kind == Term::Kind::One || f.term.kind == Term::Kind::Zero;
            return atomic ? s : "(" + s + ")";
        }
        case Formula::Kind::Lit: {
            const Literal& l = f.lit;
            switch (l.query.kind) {
                case QuerySpec::Kind::One: return l.atom;
                case QuerySpec::Kind::Nec:
                    return "nec(" + query_set_text(l.query.labels) + ", " + l.atom + ")";
                case QuerySpec::Kind::Cont:
                    return "cont(" + query_set_text(l.query.labels) + ", " + l.atom + ")";
                case QuerySpec::Kind::Suff:
                    return "suff(" + query_set_text(l.query.labels) + ", " + l.atom + ")";
                default:
                    return "<" + render_query(l.query) + ">" + l.atom;
            }
        }
        case Formula::Kind::Not:
            return "not " + print_formula_prec(f.kids[0], 3);
        case Formula::Kind::And: {
            std::string out;
            for (std::size_t i = 0; i < f.kids.size(); ++i) {
                if (i) out += ", ";
                out += print_formula_prec(f.kids[i], 2);
            }
            return parent > 2 ? "(" + out + ")" : out;
        }
        case Formula::Kind::Or: {
            std::string out;
            for (std::size_t i = 0; i < f.kids.size(); ++i) {
                if (i) out += "; ";
                out += print_formula_prec(f.kids[i], 1);
            }
            return parent > 1 ? "(" + out + ")" : out;
        }
    }
    return "?";
}

}  // namespace

std::string print_formula(const Formula& f) { return print_formula_prec(f, 0); }

std::string print_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        std::string line;
        if (!r.label) {
            line += "1: ";
        } else if (!r.head || *r.label != *r.head) {
            line += *r.label + ": ";
        }
        if (r.head) line += *r.head;
        if (!(r.body == Formula::truth())) {
            if (r.head) line += " ";
            line += ":- " + print_formula(r.body);
        }
        out += line + ".\n";
    }
    return out;
}

// -----------------------------------------------------------------------
// Normalization (flat bodies, split disjunctions, no falsum heads)

namespace {

int collapse_nots(int n) { return n <= 2 ? n : (n % 2 ? 1 : 2); }

// Pushes `nots` negations through f until negation applies only to
// literals, folding negated terms to constants.
Formula push_neg(const Formula& f, int nots) {
    nots = collapse_nots(nots);
    switch (f.kind) {
        case Formula::Kind::Not:
            return push_neg(f.kids[0], nots + 1);
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            bool flip = nots == 1;
            bool is_and = (f.kind == Formula::Kind::And) != flip;
            std::vector<Formula> kids;
            kids.reserve(f.kids.size());
            for (const auto& k : f.kids) kids.push_back(push_neg(k, nots));
            if (f.kids.empty() && nots > 0) {
                // not True = 0, not not True = 1 (and dually for Or).
                bool truthy = (f.kind == Formula::Kind::And) == (nots == 2);
                return Formula::make_term(truthy ? Term::one() : Term::zero());
            }
            return is_and ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
        }
        case Formula::Kind::Term: {
            if (nots == 0) return f;
            bool zero = eval_term(f.term).is_zero();
            bool truthy = (nots == 1) ? zero : !zero;
            return Formula::make_term(truthy ? Term::one() : Term::zero());
        }
        case Formula::Kind::Lit: {
            Formula out = f;
            for (int i = 0; i < nots; ++i) out = Formula::neg(std::move(out));
            return out;
        }
    }
    return f;
}

// Disjunctive normal form over negation-flattened formulas.
std::vector<std::vector<Formula>> dnf(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Or: {
            std::vector<std::vector<Formula>> out;
            for (const auto& k : f.kids) {
                auto sub = dnf(k);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
        }
        case Formula::Kind::And: {
            std::vector<std::vector<Formula>> out{{}};
            for (const auto& k : f.kids) {
                auto sub = dnf(k);
                std::vector<std::vector<Formula>> next;
                for (const auto& left : out) {
                    for (const auto& right : sub) {
                        std::vector<Formula> row = left;
                        row.insert(row.end(), right.begin(), right.end());
                        next.push_back(std::move(row));
                    }
                }
                out = std::move(next);
            }
            return out;
        }
        default:
            return {{f}};
    }
}

}  // namespace

bool is_flat(const Formula& f) {
    auto leaf_ok = [](const Formula& g) {
        const Formula* cur = &g;
        int nots = 0;
        while (cur->kind == Formula::Kind::Not) {
            cur = &cur->kids[0];
            ++nots;
        }
        if (nots > 2) return false;
        if (cur->kind == Formula::Kind::Term) return nots == 0;
        return cur->kind == Formula::Kind::Lit;
    };
    if (f.kind != Formula::Kind::And) return leaf_ok(f);
    for (const auto& k : f.kids) {
        if (k.kind == Formula::Kind::And || !leaf_ok(k)) return false;
    }
    return true;
}

Program normalize(const Program& p) {
    Program out;
    out.declared_fact_labels = p.declared_fact_labels;
    int aux_counter = 0;
    for (const auto& r : p.rules) {
        std::optional<std::string> label = r.label;
        std::optional<Atom> head = r.head;
        Formula body = push_neg(r.body, 0);
        std::vector<Formula> extra;
        if (!head) {
            Atom aux = kAuxPrefix + std::to_string(aux_counter++);
            head = aux;
            extra.push_back(Formula::neg(Formula::make_lit(Literal{QuerySpec::one(), aux})));
        }
        for (auto& conjuncts : dnf(body)) {
            conjuncts.insert(conjuncts.end(), extra.begin(), extra.end());
            Rule flat;
            flat.label = label;
            flat.head = head;
            flat.body = conjuncts.size() == 1 && conjuncts[0].kind == Formula::Kind::And
                            ? conjuncts[0]
                            : Formula::conj(std::move(conjuncts));
            out.rules.push_back(std::move(flat));
        }
    }
    return out;
}

// -----------------------------------------------------------------------
// Classification

Classification classify(const Program& p) {
    Classification c;
    c.positive = true;
    c.regular = true;
    c.monotonic = true;
    c.normal = true;
    c.standard = true;
    c.nec_fragment = true;
    for (const auto& r : p.rules) {
        if (r.label) c.standard = false;
        auto visit = [&](auto&& self, const Formula& f, int nots) -> void {
            switch (f.kind) {
                case Formula::Kind::Not:
                    c.positive = false;
                    c.monotonic = false;
                    if (nots >= 1) c.normal = false;  // consistent literal
                    self(self, f.kids[0], nots + 1);
                    return;
                case Formula::Kind::Lit: {
                    const QuerySpec& q = f.lit.query;
                    bool mono = is_monotonic(q);
                    if (q.kind != QuerySpec::Kind::One) c.regular = false, c.standard = false;
                    if (!mono) {
                        c.monotonic = false;
                        if (nots >= 1) c.normal = false;
                        if (q.kind != QuerySpec::Kind::Nec || nots >= 1)
                            c.nec_fragment = false;
                    } else if (nots >= 1 && q.kind != QuerySpec::Kind::One) {
                        c.nec_fragment = false;
                    }
                    return;
                }
                default:
                    for (const auto& k : f.kids) self(self, k, nots);
                    return;
            }
        };
        visit(visit, r.body, 0);
    }
    return c;
}

}  // namespace clp
