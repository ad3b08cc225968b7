#ifndef CLP_SEMANTICS_HPP
#define CLP_SEMANTICS_HPP

#include <map>
#include <string>

#include "clp/lang.hpp"

// Interpretations, valuation, the direct-consequences operator, least
// models, reducts, and the model/stable/supported checkers.

namespace clp {

/// Total map Atom -> Value; atoms without an entry read as 0. Zero
/// entries are dropped on normalization so equality is plain map
/// equality after canon().
class Interpretation {
public:
    Interpretation() = default;

    const Value& get(const Atom& a) const;
    void set(const Atom& a, Value v);
    const std::map<Atom, Value>& entries() const { return map_; }

    bool operator==(const Interpretation& other) const { return map_ == other.map_; }
    bool operator!=(const Interpretation& other) const { return map_ != other.map_; }
    bool operator<(const Interpretation& other) const { return map_ < other.map_; }

private:
    std::map<Atom, Value> map_;
};

/// Pointwise value_leq over the union of both domains.
bool interp_leq(const Interpretation& i, const Interpretation& j);

struct EvalContext {
    QueryContext query;
};

EvalContext make_context(const Program& p);

/// Value of a possibly negated literal: the positive value is the sum
/// of the accepted maximal causes of I(A); `not L` maps 0 to 1 and
/// nonzero to 0, `not not L` the reverse.
Value eval_literal(const Interpretation& i, const Literal& lit, int negations,
                   const EvalContext& ctx);

Value eval_formula(const Interpretation& i, const Formula& f, const EvalContext& ctx);

bool satisfies_rule(const Interpretation& i, const Rule& r, const EvalContext& ctx);
bool is_model(const Interpretation& i, const Program& p);

/// One application of the direct-consequences operator. The program
/// must be positive and monotonic.
Interpretation tp_step(const Program& p, const Interpretation& i, const EvalContext& ctx);

/// Least fixpoint of T_P, reached within #rules iterations.
Interpretation least_model(const Program& p);

/// Gelfond-Lifschitz style reduct: rules with unsatisfied negative or
/// consistent literals are dropped, surviving negations stripped, and
/// causal queries frozen at their atom's value per the mode.
Program reduct(const Program& p, const Interpretation& i, ReductMode mode);

/// Formula reduct F^I: negations collapse to their constant truth value
/// under I, causal queries freeze at their atom's value.
Formula reduct_formula(const Formula& f, const Interpretation& i, ReductMode mode,
                       const EvalContext& ctx);

bool is_stable_model(const Program& p, const Interpretation& i,
                     ReductMode mode = ReductMode::Uniform);

bool is_supported(const Program& p, const Interpretation& i);

std::map<Atom, int> two_valued(const Interpretation& i);

/// JSON model format: { atom: [cause, ...] }, each cause a sorted list
/// of [from, to] pairs in closed form; 1 is the empty cause [].
std::string interp_to_json(const Interpretation& i);
Interpretation interp_from_json(const std::string& text);

}  // namespace clp

#endif  // CLP_SEMANTICS_HPP
