#ifndef CLP_LANG_HPP
#define CLP_LANG_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clp/algebra.hpp"
#include "clp/queries.hpp"

// Concrete syntax and the nested-body normalizer. Programs are ground;
// an atom is an opaque name, possibly with a parenthesized argument
// tuple folded into it (e.g. "shoot(suzy)").

namespace clp {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col);
    int line;
    int col;
};

using Atom = std::string;

struct Literal {
    QuerySpec query;  // Kind::One for a bare atom
    Atom atom;

    bool operator==(const Literal& other) const {
        return atom == other.atom && query == other.query;
    }
};

struct Formula {
    enum class Kind { Term, Lit, And, Or, Not };

    Kind kind = Kind::And;  // empty conjunction, i.e. true
    Term term;              // Kind::Term
    Literal lit;            // Kind::Lit
    std::vector<Formula> kids;

    static Formula truth() { return Formula{}; }
    static Formula make_term(Term t);
    static Formula make_lit(Literal l);
    static Formula conj(std::vector<Formula> fs);
    static Formula disj(std::vector<Formula> fs);
    static Formula neg(Formula f);

    bool operator==(const Formula& other) const;
};

struct Rule {
    std::optional<std::string> label;  // nullopt = identity label "1"
    std::optional<Atom> head;          // nullopt = falsum (constraint)
    Formula body;

    bool operator==(const Rule& other) const;
};

struct Program {
    std::vector<Rule> rules;
    std::set<std::string> declared_fact_labels;

    std::set<Atom> atoms() const;
    bool operator==(const Program& other) const {
        return rules == other.rules && declared_fact_labels == other.declared_fact_labels;
    }
};

enum class DefaultLabel { Head, One };

/// Parses program text. Unlabeled non-constraint rules get their head
/// atom as label (or the identity, per dflt); `1:` forces the identity.
Program parse_program(const std::string& src, DefaultLabel dflt = DefaultLabel::Head);

/// Parses a single body formula (the CLI query syntax).
Formula parse_formula_text(const std::string& src);

/// Flattens every body to a conjunction of possibly negated literals and
/// terms, splits disjunctions into multiple rules, and rewrites each
/// falsum head via a fresh `__aux_k` atom.
Program normalize(const Program& p);

/// Round-trippable text: parse_program(print_program(p)) == p.
std::string print_program(const Program& p);
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

struct Classification {
    bool positive = false;
    bool regular = false;
    bool monotonic = false;
    bool normal = false;
    bool standard = false;
    bool nec_fragment = false;
};

/// Classifies a normalized program.
Classification classify(const Program& p);

/// True for flat bodies: a conjunction whose members are terms or
/// literals under at most two negations.
bool is_flat(const Formula& f);

constexpr const char* kAuxPrefix = "__aux_";

}  // namespace clp

#endif  // CLP_LANG_HPP
