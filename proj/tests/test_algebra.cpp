#include "doctest.h"
#include "properties.hpp"

using namespace clp;

namespace {
Value ev(const std::string& s) { return eval_term(parse_term(s)); }
}

TEST_CASE("cause construction and order") {
    Cause unit = Cause::unit();
    CHECK(unit.is_unit());
    CHECK(unit.edges().empty());

    Cause l = Cause::label("suzy");
    CHECK(l.edges() == EdgeSet{{"suzy", "suzy"}});

    Cause chain = Cause::from_edges({{"a", "b"}, {"b", "c"}});
    CHECK(chain.edges().count({"a", "c"}));  // transitivity
    CHECK(chain.edges().count({"a", "a"}));  // reflexivity
    CHECK(chain.vertices() == std::set<std::string>{"a", "b", "c"});

    // more edges = smaller; the empty graph is the top
    CHECK(cause_leq(chain, Cause::label("a")));
    CHECK(cause_leq(chain, unit));
    CHECK_FALSE(cause_leq(Cause::label("a"), chain));
    CHECK_FALSE(cause_leq(Cause::label("a"), Cause::label("b")));
}

TEST_CASE("value normal form") {
    CHECK(Value::zero().is_zero());
    CHECK(Value::one().is_one());
    CHECK(Value::from_cause(Cause::unit()).is_one());

    // absorbed causes vanish: suzy*r2 <= suzy
    Value v = Value::from_causes(
        {Cause::label("suzy"), Cause::from_edges({{"suzy", "r2"}})});
    CHECK(v.size() == 1);
    CHECK(*v.causes().begin() == Cause::label("suzy"));

    CHECK(sum_value(Value::one(), ev("a*b")).is_one());
    CHECK(product_value(Value::zero(), ev("a")).is_zero());
}

TEST_CASE("term parser and evaluation") {
    CHECK(ev("suzy.r2.r1 + suzy") == ev("suzy"));
    CHECK(ev("a·b") == ev("a.b"));
    CHECK(ev("a.(b.c)") == ev("(a.b).c"));  // application associates
    CHECK(ev("a + b*a") == ev("a"));
    CHECK(ev("(a + b)*c") == ev("a*c + b*c"));
    CHECK(ev("1") == Value::one());
    CHECK(ev("0") == Value::zero());
    CHECK(ev("shoot(suzy)") == Value::from_cause(Cause::label("shoot(suzy)")));

    CHECK_THROWS_AS(parse_term(""), AlgebraError);
    CHECK_THROWS_AS(parse_term("a +"), AlgebraError);
    CHECK_THROWS_AS(parse_term("(a"), AlgebraError);
    CHECK_THROWS_AS(Cause::label("0"), AlgebraError);
}

TEST_CASE("leq shortcuts") {
    CHECK(value_leq(ev("a.b"), ev("a + b")));
    CHECK_FALSE(value_leq(ev("a + b"), ev("a.b")));
    CHECK(value_leq_labelsum(ev("a.b + c*a"), {"a"}));
    CHECK_FALSE(value_leq_labelsum(ev("a.b + c"), {"a"}));
    CHECK(value_leq_labelsum(Value::zero(), {}));
    CHECK_FALSE(value_leq_labelsum(Value::one(), {"a"}));
}

TEST_CASE("render and reparse") {
    tu::Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        Value v = tu::random_value(rng);
        CHECK(eval_term(parse_term(render_value(v))) == v);
        CHECK(eval_term(value_to_term(v)) == v);
    }
    CHECK(render_value(Value::zero()) == "0");
    CHECK(render_value(Value::one()) == "1");
    CHECK(render_value(ev("suzy.r2.r1")) == "suzy·r2·r1");
}

TEST_CASE("transitive reduction") {
    Cause chain = Cause::from_edges({{"a", "b"}, {"b", "c"}});
    CHECK(transitive_reduction(chain) == EdgeSet{{"a", "b"}, {"b", "c"}});
    CHECK(transitive_reduction(Cause::label("a")).empty());
}

TEST_CASE("figure-one axiom oracle") {
    tu::Rng rng(42);
    CHECK(tu::axiom_failures(rng, 300) == 0);
}

TEST_CASE("lattice laws") {
    tu::Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        Value t = tu::random_value(rng), u = tu::random_value(rng),
              w = tu::random_value(rng);
        CHECK(sum_value(t, u) == sum_value(u, t));
        CHECK(product_value(t, u) == product_value(u, t));
        CHECK(sum_value(sum_value(t, u), w) == sum_value(t, sum_value(u, w)));
        CHECK(product_value(product_value(t, u), w) ==
              product_value(t, product_value(u, w)));
        CHECK(sum_value(t, product_value(t, u)) == t);
        CHECK(product_value(t, sum_value(t, u)) == t);
        CHECK(product_value(t, sum_value(u, w)) ==
              sum_value(product_value(t, u), product_value(t, w)));

        // + and * are the lub/glb of value_leq
        bool below = value_leq(t, w) && value_leq(u, w);
        CHECK(below == value_leq(sum_value(t, u), w));
        bool above = value_leq(w, t) && value_leq(w, u);
        CHECK(above == value_leq(w, product_value(t, u)));
    }
}

TEST_CASE("operation properties") {
    tu::Rng rng(11);
    CHECK(tu::antichain_failures(rng, 300) == 0);
    CHECK(tu::closure_failures(rng, 300) == 0);
    CHECK(tu::monotonicity_failures(rng, 300) == 0);
    CHECK(tu::join_primality_failures(rng, 300) == 0);
}
