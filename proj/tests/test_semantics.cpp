#include "doctest.h"
#include "clp/solver.hpp"
#include "testutil.hpp"

#ifndef CLP_PROGRAMS_DIR
#define CLP_PROGRAMS_DIR "programs"
#endif

using namespace clp;

namespace {

Value ev(const std::string& s) { return eval_term(parse_term(s)); }

Program load(const std::string& name) {
    return normalize(
        parse_program(tu::slurp(std::string(CLP_PROGRAMS_DIR) + "/" + name + ".clp")));
}

Formula random_flat_formula(tu::Rng& rng) {
    std::vector<Formula> elems;
    for (int n = tu::pick(rng, 1, 3); n > 0; --n) {
        if (tu::chance(rng, 0.15)) {
            elems.push_back(Formula::make_term(tu::random_term(rng, 2)));
            continue;
        }
        Literal lit{QuerySpec::one(), tu::atom_name(tu::pick(rng, 0, 3))};
        std::set<std::string> ls{tu::label_name(tu::pick(rng, 0, 4))};
        switch (tu::pick(rng, 0, 3)) {
            case 0: break;
            case 1: lit.query = QuerySpec::nec(ls); break;
            case 2: lit.query = QuerySpec::cont(ls); break;
            default: lit.query = QuerySpec::suff(ls); break;
        }
        Formula f = Formula::make_lit(std::move(lit));
        for (int k = tu::pick(rng, 0, 2); k > 0; --k) f = Formula::neg(std::move(f));
        elems.push_back(std::move(f));
    }
    return Formula::conj(std::move(elems));
}

}  // namespace

TEST_CASE("formula valuation") {
    Interpretation i;
    i.set("p", ev("a + b.c"));
    i.set("q", ev("d"));
    EvalContext ctx;

    CHECK(eval_formula(i, parse_formula_text("p"), ctx) == ev("a + b.c"));
    CHECK(eval_formula(i, parse_formula_text("p, q"), ctx) == ev("(a + b.c)*d"));
    CHECK(eval_formula(i, parse_formula_text("p; q"), ctx) == ev("a + b.c + d"));
    CHECK(eval_formula(i, parse_formula_text("not p"), ctx) == Value::zero());
    CHECK(eval_formula(i, parse_formula_text("not r"), ctx) == Value::one());
    CHECK(eval_formula(i, parse_formula_text("not not p"), ctx) == Value::one());
    CHECK(eval_formula(i, parse_formula_text("nec({a}, p)"), ctx) == Value::zero());
    CHECK(eval_formula(i, parse_formula_text("cont({a}, p)"), ctx) == ev("a"));
    CHECK(eval_formula(i, parse_formula_text("(x*y), q"), ctx) == ev("x*y*d"));
}

TEST_CASE("direct consequences trace on the two-leak program") {
    Program p = load("accident_billy");
    EvalContext ctx = make_context(p);

    Interpretation t1 = tp_step(p, Interpretation{}, ctx);
    CHECK(t1.get("suzy") == ev("suzy"));
    CHECK(t1.get("billy") == ev("billy"));
    CHECK(t1.get("oil") == ev("oil"));
    CHECK(t1.get("accident") == Value::zero());

    Interpretation t2 = tp_step(p, t1, ctx);
    CHECK(t2.get("oil") == ev("(suzy*billy).r2 + oil"));
    CHECK(t2.get("accident") == ev("oil.r1"));

    Interpretation t3 = tp_step(p, t2, ctx);
    CHECK(t3.get("accident") == ev("(suzy*billy).r2.r1 + oil.r1"));
    CHECK(tp_step(p, t3, ctx) == t3);  // fixpoint within #rules steps
    CHECK(least_model(p) == t3);
}

TEST_CASE("least model chain is increasing") {
    tu::Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        Program p = normalize(tu::random_regular_program(rng, 5, 8));
        std::erase_if(p.rules, [](const Rule& r) {
            return r.body.kind == Formula::Kind::Not;
        });
        for (auto& r : p.rules) {
            if (r.body.kind == Formula::Kind::And)
                std::erase_if(r.body.kids, [](const Formula& f) {
                    return f.kind == Formula::Kind::Not;
                });
        }
        EvalContext ctx = make_context(p);
        Interpretation cur;
        for (std::size_t step = 0; step <= p.rules.size(); ++step) {
            Interpretation next = tp_step(p, cur, ctx);
            CHECK(interp_leq(cur, next));
            if (next == cur) break;
            cur = std::move(next);
        }
        CHECK(tp_step(p, cur, ctx) == cur);
    }
}

TEST_CASE("model and stability checks") {
    Program p = load("accident_base");
    Interpretation good;
    good.set("suzy", ev("suzy"));
    good.set("oil", ev("suzy.r2"));
    good.set("accident", ev("suzy.r2.r1"));
    CHECK(is_model(good, p));
    CHECK(is_stable_model(p, good, ReductMode::Uniform));
    CHECK(is_stable_model(p, good, ReductMode::Selective));
    CHECK(is_supported(p, good));

    Interpretation bloated = good;
    bloated.set("accident", ev("suzy.r2.r1 + extra"));
    CHECK(is_model(bloated, p));  // models may overshoot
    CHECK_FALSE(is_stable_model(p, bloated, ReductMode::Uniform));
    CHECK_FALSE(is_supported(p, bloated));

    Interpretation starved;
    CHECK_FALSE(is_model(starved, p));

    // unsupported cause on a single-rule program
    Program single = normalize(parse_program("r1: p."));
    Interpretation two;
    two.set("p", ev("r1 + r2"));
    CHECK_FALSE(is_supported(single, two));

    Program odd = load("odd_loop");
    Interpretation a_true;
    a_true.set("a", ev("a"));
    CHECK_FALSE(is_stable_model(odd, Interpretation{}, ReductMode::Uniform));
    CHECK_FALSE(is_stable_model(odd, a_true, ReductMode::Uniform));
}

TEST_CASE("reduct outputs are positive and monotonic") {
    tu::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Program p = normalize(tu::random_nec_program(rng));
        Interpretation iv = tu::random_interp(rng, p.atoms());
        for (ReductMode mode : {ReductMode::Uniform, ReductMode::Selective}) {
            Classification c = classify(reduct(p, iv, mode));
            CHECK(c.positive);
            CHECK(c.monotonic);
        }
    }
}

TEST_CASE("reduct leaves the valuation fixed") {
    tu::Rng rng(37);
    std::set<std::string> facts{"a", "b"};
    EvalContext ctx;
    ctx.query.fact_labels = &facts;
    std::set<Atom> atoms{"p0", "p1", "p2", "p3"};
    for (int i = 0; i < 500; ++i) {
        Interpretation iv = tu::random_interp(rng, atoms);
        Formula f = random_flat_formula(rng);
        for (ReductMode mode : {ReductMode::Uniform, ReductMode::Selective}) {
            Formula red = reduct_formula(f, iv, mode, ctx);
            CHECK(eval_formula(iv, red, ctx) == eval_formula(iv, f, ctx));
        }
    }
}

TEST_CASE("uniform and selective reducts agree on stability") {
    tu::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        Program p = normalize(tu::random_nec_program(rng, 4, 6));
        std::vector<Interpretation> candidates;
        for (const auto& m : solve_auto(p).models) candidates.push_back(m);
        for (int k = 0; k < 4; ++k)
            candidates.push_back(tu::random_interp(rng, p.atoms()));
        for (const auto& iv : candidates) {
            CHECK(is_stable_model(p, iv, ReductMode::Uniform) ==
                  is_stable_model(p, iv, ReductMode::Selective));
        }
    }
}

TEST_CASE("interpretation json round trip") {
    tu::Rng rng(43);
    for (int i = 0; i < 50; ++i) {
        Interpretation iv = tu::random_interp(rng, {"p", "q", "r"});
        CHECK(interp_from_json(interp_to_json(iv)) == iv);
    }
    CHECK(interp_to_json(Interpretation{}) == "{}");
}

TEST_CASE("two_valued projection") {
    Interpretation iv;
    iv.set("p", ev("a"));
    iv.set("q", Value::one());
    CHECK(two_valued(iv) == std::map<Atom, int>{{"p", 1}, {"q", 1}});
}
