#ifndef CLP_TEST_PROPERTIES_HPP
#define CLP_TEST_PROPERTIES_HPP

#include "clp/solver.hpp"
#include "testutil.hpp"

// Randomized property suites shared by the unit tests and the
// acceptance gate. Each suite returns the number of failing cases out
// of `iters`, so callers can report either way.

namespace tu {

inline bool values_equal(const clp::Term& a, const clp::Term& b) {
    return clp::eval_term(a) == clp::eval_term(b);
}

// The algebra's axioms, instantiated with random subterms. Sum-free
// instantiations are used where an axiom is stated for terms without +.
inline int axiom_failures(Rng& rng, int iters) {
    using clp::Term;
    int bad = 0;
    auto expect = [&](const Term& a, const Term& b) {
        if (!values_equal(a, b)) ++bad;
    };
    for (int i = 0; i < iters; ++i) {
        Term t = random_term(rng), u = random_term(rng), w = random_term(rng);

        // associativity of application
        expect(Term::apply(t, Term::apply(u, w)), Term::apply(Term::apply(t, u), w));

        // absorption
        Term utw = Term::apply(Term::apply(u, t), w);
        expect(t, Term::sum({t, utw}));
        expect(utw, Term::product({t, utw}));

        // identity and annihilator
        expect(t, Term::apply(Term::one(), t));
        expect(t, Term::apply(t, Term::one()));
        expect(Term::zero(), Term::apply(t, Term::zero()));
        expect(Term::zero(), Term::apply(Term::zero(), t));

        // idempotence of application on labels
        Term l = Term::make_label(label_name(pick(rng, 0, 4)));
        expect(Term::apply(l, l), l);

        // addition distributivity
        expect(Term::apply(t, Term::sum({u, w})),
               Term::sum({Term::apply(t, u), Term::apply(t, w)}));
        expect(Term::apply(Term::sum({t, u}), w),
               Term::sum({Term::apply(t, w), Term::apply(u, w)}));

        // product distributivity over sum-free terms
        Term c = random_term(rng, 4, true), e = random_term(rng, 4, true);
        Term d = random_term(rng, 4, true);
        while (clp::eval_term(d).is_one()) d = random_term(rng, 4, true);
        expect(Term::apply(Term::apply(c, d), e),
               Term::product({Term::apply(c, d), Term::apply(d, e)}));
        expect(Term::apply(c, Term::product({d, e})),
               Term::product({Term::apply(c, d), Term::apply(c, e)}));
        expect(Term::apply(Term::product({c, d}), e),
               Term::product({Term::apply(c, e), Term::apply(d, e)}));
    }
    return bad;
}

inline bool is_antichain(const clp::Value& v) {
    for (const auto& g : v.causes()) {
        for (const auto& h : v.causes()) {
            if (g == h) continue;
            if (clp::cause_leq(g, h) || clp::cause_leq(h, g)) return false;
        }
    }
    return true;
}

inline int antichain_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        clp::Value t = random_value(rng), u = random_value(rng);
        if (!is_antichain(sum_value(t, u)) || !is_antichain(product_value(t, u)) ||
            !is_antichain(apply_value(t, u)))
            ++bad;
    }
    return bad;
}

inline bool well_closed(const clp::Cause& g) {
    const clp::EdgeSet& e = g.edges();
    for (const auto& [a, b] : e) {
        if (!e.count({a, a}) || !e.count({b, b})) return false;
    }
    for (const auto& [a, b] : e) {
        for (const auto& [c, d] : e) {
            if (b == c && !e.count({a, d})) return false;
        }
    }
    return true;
}

inline int closure_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        clp::Cause g = random_cause(rng), h = random_cause(rng);
        if (!well_closed(product_cause(g, h)) || !well_closed(apply_cause(g, h))) ++bad;
    }
    return bad;
}

inline int monotonicity_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        clp::Value t = random_value(rng), u = random_value(rng);
        clp::Value t2 = sum_value(t, random_value(rng));
        clp::Value u2 = sum_value(u, random_value(rng));
        if (!value_leq(sum_value(t, u), sum_value(t2, u2)) ||
            !value_leq(product_value(t, u), product_value(t2, u2)) ||
            !value_leq(apply_value(t, u), apply_value(t2, u2)))
            ++bad;
    }
    return bad;
}

inline int join_primality_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        std::vector<clp::Value> parts;
        int n = pick(rng, 1, 4);
        clp::Value total = clp::Value::zero();
        for (int k = 0; k < n; ++k) {
            parts.push_back(random_value(rng));
            total = sum_value(total, parts.back());
        }
        // half the time force the positive case by drawing G below the sum
        clp::Cause g = random_cause(rng);
        if (chance(rng, 0.5) && !total.is_zero()) {
            auto it = total.causes().begin();
            std::advance(it, pick(rng, 0, static_cast<int>(total.size()) - 1));
            g = product_cause(*it, g);
        }
        if (!value_leq(clp::Value::from_cause(g), total)) continue;
        bool found = false;
        for (const auto& t : parts) {
            if (value_leq(clp::Value::from_cause(g), t)) {
                found = true;
                break;
            }
        }
        if (!found) ++bad;
    }
    return bad;
}

// Every model any solver emits must be a model, supported, and stable
// under both reduct modes.
inline int supported_model_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        clp::Program p = normalize(i % 2 ? random_nec_program(rng, 4, 5)
                                         : random_regular_program(rng, 4, 6));
        clp::SolveReport r = solve_auto(p);
        for (const auto& m : r.models) {
            if (!is_model(m, p) || !is_supported(p, m) ||
                !is_stable_model(p, m, clp::ReductMode::Uniform) ||
                !is_stable_model(p, m, clp::ReductMode::Selective))
                ++bad;
        }
    }
    return bad;
}

inline int incomparability_failures(Rng& rng, int iters) {
    int bad = 0;
    for (int i = 0; i < iters; ++i) {
        ProgramOptions opt;
        opt.max_atoms = 4;
        opt.max_rules = 6;
        opt.allow_queries = true;  // positive queries only: stays normal
        clp::Program p = normalize(random_program(rng, opt));
        if (!classify(p).normal) {
            ++bad;  // generator contract, not a semantics property
            continue;
        }
        clp::SolveReport r = solve_auto(p);
        for (std::size_t a = 0; a < r.models.size(); ++a) {
            for (std::size_t b = 0; b < r.models.size(); ++b) {
                if (a != b && interp_leq(r.models[a], r.models[b])) ++bad;
            }
        }
    }
    return bad;
}

}  // namespace tu

#endif  // CLP_TEST_PROPERTIES_HPP
