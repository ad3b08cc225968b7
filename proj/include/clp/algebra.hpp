#ifndef CLP_ALGEBRA_HPP
#define CLP_ALGEBRA_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Causal value algebra: causes are reflexively and transitively closed
// edge sets over labels, values are antichains of <=-maximal causes.
// All types are immutable after construction; operations are pure.

namespace clp {

class AlgebraError : public std::runtime_error {
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

/// Reserved names denoting the algebra's top/bottom; never valid labels.
bool is_reserved_label(const std::string& name);
void check_label(const std::string& name);

using Edge = std::pair<std::string, std::string>;
using EdgeSet = std::set<Edge>;

/// One sum-free justification: a causal graph stored as its full
/// reflexive-transitive closure, so G <= H is a plain superset test.
class Cause {
public:
    Cause() = default;  // the empty graph, i.e. term 1

    static Cause unit() { return Cause(); }
    static Cause label(const std::string& name);
    /// Builds from arbitrary edges, closing them.
    static Cause from_edges(EdgeSet edges);

    bool is_unit() const { return edges_.empty(); }
    const EdgeSet& edges() const { return edges_; }
    /// Bloom fingerprint of the edge set; fp(h) & ~fp(g) nonzero refutes
    /// edges(h) subset of edges(g) without touching the sets.
    std::uint64_t fingerprint() const { return fp_; }
    std::set<std::string> vertices() const;
    bool has_vertex(const std::string& l) const;

    bool operator==(const Cause& other) const { return edges_ == other.edges_; }
    bool operator!=(const Cause& other) const { return edges_ != other.edges_; }

    /// Canonical order: edge count first, then lexicographic edge list.
    bool operator<(const Cause& other) const;

private:
    void refresh_fingerprint();

    EdgeSet edges_;
    std::uint64_t fp_ = 0;
};

/// G <= H in the lattice order (G * H = G), i.e. edges(H) subset of edges(G).
bool cause_leq(const Cause& g, const Cause& h);

/// Meet of sum-free terms: graph union, re-closed.
Cause product_cause(const Cause& g, const Cause& h);

/// Rule application: union plus all edges from vertices of g to vertices of h.
Cause apply_cause(const Cause& g, const Cause& h);

/// A causal value in minimal disjunctive normal form: an antichain of
/// causes. Empty set is 0, the singleton {empty graph} is 1.
class Value {
public:
    Value() = default;  // 0

    static Value zero() { return Value(); }
    static Value one();
    static Value from_cause(Cause g);
    /// Keeps only the <=-maximal causes of the given set.
    static Value from_causes(std::vector<Cause> causes);

    bool is_zero() const { return causes_.empty(); }
    bool is_one() const { return causes_.size() == 1 && causes_.begin()->is_unit(); }
    const std::set<Cause>& causes() const { return causes_; }
    std::size_t size() const { return causes_.size(); }

    bool operator==(const Value& other) const { return causes_ == other.causes_; }
    bool operator!=(const Value& other) const { return causes_ != other.causes_; }
    bool operator<(const Value& other) const { return causes_ < other.causes_; }

private:
    std::set<Cause> causes_;
};

Value sum_value(const Value& t, const Value& u);
Value product_value(const Value& t, const Value& u);
Value apply_value(const Value& t, const Value& u);

/// t <= u: every cause of t is below some cause of u.
bool value_leq(const Value& t, const Value& u);

/// t <= sum of the labels in a: every cause of t mentions some label of a.
/// Polynomial-time shortcut justified by join-primality of causes.
bool value_leq_labelsum(const Value& t, const std::set<std::string>& labels);

/// Causal term syntax tree. Product/sum over empty argument lists denote
/// 1 and 0 respectively.
struct Term {
    enum class Kind { Label, One, Zero, Product, Sum, Apply };

    Kind kind = Kind::One;
    std::string label;        // Kind::Label
    std::vector<Term> args;   // Product/Sum (n-ary), Apply (exactly 2)

    static Term make_label(std::string name);
    static Term one() { return Term{Kind::One, {}, {}}; }
    static Term zero() { return Term{Kind::Zero, {}, {}}; }
    static Term product(std::vector<Term> args);
    static Term sum(std::vector<Term> args);
    static Term apply(Term lhs, Term rhs);
};

Value eval_term(const Term& t);

/// Parses the term grammar `0 | 1 | label | t*t | t+t | t.t | (t)` with
/// precedence `.` > `*` > `+`. Accepts the middle dot as a synonym of `.`.
Term parse_term(const std::string& src);

/// A term that evaluates back to exactly this value (sum over causes,
/// each cause a product of its edges).
Term value_to_term(const Value& v);

/// Canonical text: addends sorted, each cause a `*`-product of the
/// maximal application chains of its transitive reduction.
std::string render_value(const Value& v);
std::string render_cause(const Cause& g);

/// Non-reflexive edges with no shortcut through a third vertex.
EdgeSet transitive_reduction(const Cause& g);

}  // namespace clp

#endif  // CLP_ALGEBRA_HPP
