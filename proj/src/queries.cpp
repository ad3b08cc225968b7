#include "clp/queries.hpp"

#include <algorithm>

namespace clp {

namespace {

void check_label_set(const std::set<std::string>& a) {
    for (const auto& l : a) check_label(l);
}

}  // namespace

QuerySpec QuerySpec::nec(std::set<std::string> a) {
    check_label_set(a);
    QuerySpec q;
    q.kind = Kind::Nec;
    q.labels = std::move(a);
    return q;
}

QuerySpec QuerySpec::cont(std::set<std::string> a) {
    check_label_set(a);
    QuerySpec q;
    q.kind = Kind::Cont;
    q.labels = std::move(a);
    return q;
}

QuerySpec QuerySpec::suff(std::set<std::string> a) {
    check_label_set(a);
    QuerySpec q;
    q.kind = Kind::Suff;
    q.labels = std::move(a);
    return q;
}

bool QuerySpec::operator==(const QuerySpec& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::One: return true;
        case Kind::Nec:
        case Kind::Cont:
        case Kind::Suff: return labels == other.labels;
        case Kind::Reduced:
            return passing == other.passing && source_value == other.source_value &&
                   ((base == other.base) || (base && other.base && *base == *other.base));
        case Kind::External: return external == other.external;
    }
    return false;
}

bool eval_query(const QuerySpec& q, const Cause& g, const Value& t,
                const QueryContext& ctx) {
    switch (q.kind) {
        case QuerySpec::Kind::One:
            return true;
        case QuerySpec::Kind::Nec:
            return value_leq_labelsum(t, q.labels);
        case QuerySpec::Kind::Cont:
            for (const auto& l : q.labels) {
                if (g.has_vertex(l)) return true;
            }
            return false;
        case QuerySpec::Kind::Suff: {
            if (!ctx.fact_labels) return true;  // no declared facts
            for (const auto& v : g.vertices()) {
                if (ctx.fact_labels->count(v) && !q.labels.count(v)) return false;
            }
            return true;
        }
        case QuerySpec::Kind::Reduced:
            for (const auto& gp : q.passing) {
                if (cause_leq(gp, g)) return true;
            }
            return false;
        case QuerySpec::Kind::External:
            return (*q.external)(g);
    }
    return false;
}

QuerySpec reduce_query(const QuerySpec& q, const Value& t, ReductMode mode,
                       const QueryContext& ctx) {
    if (mode == ReductMode::Selective && is_monotonic(q)) return q;
    QuerySpec r;
    r.kind = QuerySpec::Kind::Reduced;
    r.base = std::make_shared<QuerySpec>(q);
    r.source_value = t;
    for (const auto& g : t.causes()) {
        if (eval_query(q, g, t, ctx)) r.passing.insert(g);
    }
    return r;
}

bool is_monotonic(const QuerySpec& q) {
    switch (q.kind) {
        case QuerySpec::Kind::One:
        case QuerySpec::Kind::Suff:
        case QuerySpec::Kind::Reduced:
        case QuerySpec::Kind::External:
            return true;
        case QuerySpec::Kind::Nec:
        case QuerySpec::Kind::Cont:
            return false;
    }
    return false;
}

MQuery to_mquery(const QuerySpec& q, const QueryContext& ctx) {
    if (!is_monotonic(q)) throw AlgebraError("to_mquery requires a monotonic query");
    return [q, ctx](const Cause& g) { return eval_query(q, g, Value::one(), ctx); };
}

QuerySpec from_mquery(MQuery phi) {
    QuerySpec q;
    q.kind = QuerySpec::Kind::External;
    q.external = std::make_shared<std::function<bool(const Cause&)>>(std::move(phi));
    return q;
}

std::string render_query(const QuerySpec& q) {
    auto set_text = [](const std::set<std::string>& a) {
        std::string out = "{";
        bool first = true;
        for (const auto& l : a) {
            if (!first) out += ",";
            out += l;
            first = false;
        }
        return out + "}";
    };
    switch (q.kind) {
        case QuerySpec::Kind::One: return "one";
        case QuerySpec::Kind::Nec: return "nec(" + set_text(q.labels) + ", _)";
        case QuerySpec::Kind::Cont: return "cont(" + set_text(q.labels) + ", _)";
        case QuerySpec::Kind::Suff: return "suff(" + set_text(q.labels) + ", _)";
        case QuerySpec::Kind::Reduced:
            return "reduced[" + (q.base ? render_query(*q.base) : std::string("?")) + "]";
        case QuerySpec::Kind::External: return "external";
    }
    return "?";
}

}  // namespace clp
