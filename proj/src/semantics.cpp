#include "clp/semantics.hpp"

#include <nlohmann/json.hpp>

namespace clp {

namespace {
const Value kZero = Value::zero();
}

const Value& Interpretation::get(const Atom& a) const {
    auto it = map_.find(a);
    return it == map_.end() ? kZero : it->second;
}

void Interpretation::set(const Atom& a, Value v) {
    if (v.is_zero()) {
        map_.erase(a);
    } else {
        map_[a] = std::move(v);
    }
}

bool interp_leq(const Interpretation& i, const Interpretation& j) {
    for (const auto& [atom, value] : i.entries()) {
        if (!value_leq(value, j.get(atom))) return false;
    }
    return true;
}

EvalContext make_context(const Program& p) {
    EvalContext ctx;
    ctx.query.fact_labels = &p.declared_fact_labels;
    return ctx;
}

Value eval_literal(const Interpretation& i, const Literal& lit, int negations,
                   const EvalContext& ctx) {
    const Value& t = i.get(lit.atom);
    Value positive;
    if (lit.query.kind == QuerySpec::Kind::One) {
        positive = t;
    } else {
        std::vector<Cause> accepted;
        for (const auto& g : t.causes()) {
            if (eval_query(lit.query, g, t, ctx.query)) accepted.push_back(g);
        }
        positive = Value::from_causes(std::move(accepted));
    }
    if (negations == 0) return positive;
    bool zero = positive.is_zero();
    if (negations % 2 == 1) return zero ? Value::one() : Value::zero();
    return zero ? Value::zero() : Value::one();
}

Value eval_formula(const Interpretation& i, const Formula& f, const EvalContext& ctx) {
    switch (f.kind) {
        case Formula::Kind::Term:
            return eval_term(f.term);
        case Formula::Kind::Lit:
            return eval_literal(i, f.lit, 0, ctx);
        case Formula::Kind::Not: {
            const Formula* cur = &f;
            int nots = 0;
            while (cur->kind == Formula::Kind::Not) {
                cur = &cur->kids[0];
                ++nots;
            }
            bool zero = eval_formula(i, *cur, ctx).is_zero();
            if (nots % 2 == 1) return zero ? Value::one() : Value::zero();
            return zero ? Value::zero() : Value::one();
        }
        case Formula::Kind::And: {
            Value acc = Value::one();
            for (const auto& k : f.kids) acc = product_value(acc, eval_formula(i, k, ctx));
            return acc;
        }
        case Formula::Kind::Or: {
            Value acc = Value::zero();
            for (const auto& k : f.kids) acc = sum_value(acc, eval_formula(i, k, ctx));
            return acc;
        }
    }
    return Value::zero();
}

namespace {

Value rule_fire(const Interpretation& i, const Rule& r, const EvalContext& ctx) {
    Value body = eval_formula(i, r.body, ctx);
    Value label = r.label ? Value::from_cause(Cause::label(*r.label)) : Value::one();
    return apply_value(body, label);
}

}  // namespace

bool satisfies_rule(const Interpretation& i, const Rule& r, const EvalContext& ctx) {
    Value fired = rule_fire(i, r, ctx);
    if (!r.head) return fired.is_zero();  // falsum head
    return value_leq(fired, i.get(*r.head));
}

bool is_model(const Interpretation& i, const Program& p) {
    EvalContext ctx = make_context(p);
    for (const auto& r : p.rules) {
        if (!satisfies_rule(i, r, ctx)) return false;
    }
    return true;
}

namespace {

void require_positive_monotonic(const Program& p) {
    auto visit = [&](auto&& self, const Formula& f) -> void {
        if (f.kind == Formula::Kind::Not)
            throw AlgebraError("negation in a positive-program operation");
        if (f.kind == Formula::Kind::Lit && !is_monotonic(f.lit.query))
            throw AlgebraError("non-monotonic literal in a positive-program operation");
        for (const auto& k : f.kids) self(self, k);
    };
    for (const auto& r : p.rules) visit(visit, r.body);
}

}  // namespace

Interpretation tp_step(const Program& p, const Interpretation& i, const EvalContext& ctx) {
    std::map<Atom, Value> acc;
    for (const auto& r : p.rules) {
        if (!r.head) continue;
        Value fired = rule_fire(i, r, ctx);
        auto it = acc.find(*r.head);
        if (it == acc.end()) {
            acc[*r.head] = std::move(fired);
        } else {
            it->second = sum_value(it->second, fired);
        }
    }
    Interpretation out;
    for (auto& [atom, value] : acc) out.set(atom, std::move(value));
    return out;
}

Interpretation least_model(const Program& p) {
    require_positive_monotonic(p);
    EvalContext ctx = make_context(p);
    Interpretation cur;
    std::size_t cap = p.rules.size() + 1;
    for (std::size_t step = 0; step < cap; ++step) {
        Interpretation next = tp_step(p, cur, ctx);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    Interpretation fix = tp_step(p, cur, ctx);
    if (fix != cur) throw AlgebraError("least_model did not reach a fixpoint in #rules steps");
    return cur;
}

Program reduct(const Program& p, const Interpretation& i, ReductMode mode) {
    EvalContext ctx = make_context(p);
    Program out;
    out.declared_fact_labels = p.declared_fact_labels;
    for (const auto& r : p.rules) {
        if (!is_flat(r.body)) throw AlgebraError("reduct requires a normalized program");
        std::vector<Formula> kept;
        bool drop = false;
        auto handle = [&](const Formula& elem) {
            const Formula* cur = &elem;
            int nots = 0;
            while (cur->kind == Formula::Kind::Not) {
                cur = &cur->kids[0];
                ++nots;
            }
            if (nots > 0) {
                if (eval_formula(i, elem, ctx).is_zero()) drop = true;
                return;  // satisfied negative/consistent literal stripped
            }
            if (cur->kind == Formula::Kind::Lit) {
                Literal lit = cur->lit;
                lit.query = reduce_query(lit.query, i.get(lit.atom), mode, ctx.query);
                kept.push_back(Formula::make_lit(std::move(lit)));
            } else {
                kept.push_back(*cur);
            }
        };
        if (r.body.kind == Formula::Kind::And) {
            for (const auto& k : r.body.kids) {
                handle(k);
                if (drop) break;
            }
        } else {
            handle(r.body);
        }
        if (drop) continue;
        Rule nr;
        nr.label = r.label;
        nr.head = r.head;
        nr.body = Formula::conj(std::move(kept));
        out.rules.push_back(std::move(nr));
    }
    return out;
}

Formula reduct_formula(const Formula& f, const Interpretation& i, ReductMode mode,
                       const EvalContext& ctx) {
    switch (f.kind) {
        case Formula::Kind::Term:
            return f;
        case Formula::Kind::Lit: {
            Literal lit = f.lit;
            lit.query = reduce_query(lit.query, i.get(lit.atom), mode, ctx.query);
            return Formula::make_lit(std::move(lit));
        }
        case Formula::Kind::Not:
            return Formula::make_term(eval_formula(i, f, ctx).is_zero() ? Term::zero()
                                                                        : Term::one());
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f.kids.size());
            for (const auto& k : f.kids) kids.push_back(reduct_formula(k, i, mode, ctx));
            return f.kind == Formula::Kind::And ? Formula::conj(std::move(kids))
                                                : Formula::disj(std::move(kids));
        }
    }
    return f;
}

bool is_stable_model(const Program& p, const Interpretation& i, ReductMode mode) {
    Program red = reduct(p, i, mode);
    // A constraint survives its reduct only if the body is already
    // falsified; a surviving falsum head can never be satisfied.
    for (const auto& r : red.rules) {
        if (!r.head) return false;
    }
    return least_model(red) == i;
}

bool is_supported(const Program& p, const Interpretation& i) {
    EvalContext ctx = make_context(p);
    for (const auto& [atom, value] : i.entries()) {
        for (const auto& g : value.causes()) {
            bool covered = false;
            for (const auto& r : p.rules) {
                if (!r.head || *r.head != atom) continue;
                Value fired = rule_fire(i, r, ctx);
                for (const auto& h : fired.causes()) {
                    if (cause_leq(g, h)) {
                        covered = true;
                        break;
                    }
                }
                if (covered) break;
            }
            if (!covered) return false;
        }
    }
    return true;
}

std::map<Atom, int> two_valued(const Interpretation& i) {
    std::map<Atom, int> out;
    for (const auto& [atom, value] : i.entries()) out[atom] = value.is_zero() ? 0 : 1;
    return out;
}

std::string interp_to_json(const Interpretation& i) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [atom, value] : i.entries()) {
        nlohmann::json causes = nlohmann::json::array();
        for (const auto& g : value.causes()) {
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
            causes.push_back(std::move(edges));
        }
        j[atom] = std::move(causes);
    }
    return j.dump(2);
}

Interpretation interp_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Interpretation out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<Cause> causes;
        for (const auto& cause : it.value()) {
            EdgeSet edges;
            for (const auto& e : cause) {
                edges.insert({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
            }
            causes.push_back(Cause::from_edges(std::move(edges)));
        }
        out.set(it.key(), Value::from_causes(std::move(causes)));
    }
    return out;
}

}  // namespace clp
