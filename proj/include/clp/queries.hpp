#ifndef CLP_QUERIES_HPP
#define CLP_QUERIES_HPP

#include <functional>
#include <memory>
#include <set>
#include <string>

#include "clp/algebra.hpp"

// Causal queries: boolean tests psi(G, t) over a candidate cause G and
// the full value t of the queried atom, anti-monotonic in t.

namespace clp {

struct QuerySpec {
    enum class Kind { One, Nec, Cont, Suff, Reduced, External };

    Kind kind = Kind::One;
    std::set<std::string> labels;  // Nec/Cont/Suff argument A

    // Reduced(base, passing, source): the base query frozen at a fixed
    // value; accepts G iff some passing cause lies below G.
    std::shared_ptr<const QuerySpec> base;
    std::set<Cause> passing;
    Value source_value;

    // External: an opaque m-query wrapped via from_mquery. Monotonicity
    // is the caller's promise; equality is by identity.
    std::shared_ptr<const std::function<bool(const Cause&)>> external;

    static QuerySpec one() { return QuerySpec{}; }
    static QuerySpec nec(std::set<std::string> a);
    static QuerySpec cont(std::set<std::string> a);
    static QuerySpec suff(std::set<std::string> a);

    bool operator==(const QuerySpec& other) const;
};

/// Context a query may need beyond (G, t): the program's declared fact
/// labels, consulted by suff.
struct QueryContext {
    const std::set<std::string>* fact_labels = nullptr;
};

bool eval_query(const QuerySpec& q, const Cause& g, const Value& t,
                const QueryContext& ctx = {});

enum class ReductMode { Uniform, Selective };

/// Freezes q at the value t. Under the selective mode monotonic queries
/// are returned unchanged; the uniform mode reduces every query.
QuerySpec reduce_query(const QuerySpec& q, const Value& t,
                       ReductMode mode = ReductMode::Uniform,
                       const QueryContext& ctx = {});

bool is_monotonic(const QuerySpec& q);

using MQuery = std::function<bool(const Cause&)>;

/// phi(G) = psi(G, 1); only defined for monotonic queries.
MQuery to_mquery(const QuerySpec& q, const QueryContext& ctx = {});
/// psi(G, t) = phi(G), ignoring t.
QuerySpec from_mquery(MQuery phi);

/// Display form, e.g. "nec({suzy}, _)" without the atom.
std::string render_query(const QuerySpec& q);

}  // namespace clp

#endif  // CLP_QUERIES_HPP
