#include "clp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>

#include <nlohmann/json.hpp>

namespace clp {

namespace {

// Flat-body iteration: calls fn(element, inner_literal_or_term, nots).
template <typename Fn>
void for_each_element(const Formula& body, Fn fn) {
    auto one = [&](const Formula& elem) {
        const Formula* cur = &elem;
        int nots = 0;
        while (cur->kind == Formula::Kind::Not) {
            cur = &cur->kids[0];
            ++nots;
        }
        fn(elem, *cur, nots);
    };
    if (body.kind == Formula::Kind::And) {
        for (const auto& k : body.kids) one(k);
    } else {
        one(body);
    }
}

void require_normalized(const Program& p) {
    for (const auto& r : p.rules) {
        if (!r.head || !is_flat(r.body))
            throw AlgebraError("solver requires a normalized program");
    }
}

// body atom -> head -> strict? (strict = via negation or a
// non-monotonic causal literal)
std::map<Atom, std::map<Atom, bool>> dependency_edges(const Program& p) {
    std::map<Atom, std::map<Atom, bool>> edges;
    for (const auto& r : p.rules) {
        const Atom& head = *r.head;
        for_each_element(r.body, [&](const Formula&, const Formula& inner, int nots) {
            if (inner.kind != Formula::Kind::Lit) return;
            bool strict = nots > 0 || !is_monotonic(inner.lit.query);
            bool& flag = edges[inner.lit.atom][head];
            flag = flag || strict;
        });
    }
    return edges;
}

std::map<Atom, int> tarjan_components(const std::set<Atom>& atoms,
                                      const std::map<Atom, std::map<Atom, bool>>& edges) {
    std::map<Atom, int> index, low, comp;
    std::vector<Atom> stack;
    std::set<Atom> on_stack;
    int counter = 0, comp_count = 0;
    std::function<void(const Atom&)> connect = [&](const Atom& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        auto it = edges.find(v);
        if (it != edges.end()) {
            for (const auto& [w, strict] : it->second) {
                if (!index.count(w)) {
                    connect(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on_stack.count(w)) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                Atom w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (const auto& a : atoms) {
        if (!index.count(a)) connect(a);
    }
    return comp;
}

}  // namespace

// -----------------------------------------------------------------------
// Stratification

DependencyInfo stratify(const Program& p) {
    require_normalized(p);
    DependencyInfo info;
    std::set<Atom> atoms = p.atoms();
    info.edges = dependency_edges(p);
    std::map<Atom, int> comp = tarjan_components(atoms, info.edges);

    // A strict edge inside one SCC defeats stratification; report the
    // cycle through it as witness.
    for (const auto& [b, outs] : info.edges) {
        for (const auto& [h, strict] : outs) {
            if (!strict || comp[b] != comp[h]) continue;
            info.stratifiable = false;
            // BFS h -> b inside the component.
            std::map<Atom, Atom> parent;
            std::deque<Atom> queue{h};
            std::set<Atom> seen{h};
            while (!queue.empty()) {
                Atom cur = queue.front();
                queue.pop_front();
                if (cur == b) break;
                auto oit = info.edges.find(cur);
                if (oit == info.edges.end()) continue;
                for (const auto& [next, _] : oit->second) {
                    if (comp[next] != comp[b] || seen.count(next)) continue;
                    seen.insert(next);
                    parent[next] = cur;
                    queue.push_back(next);
                }
            }
            std::vector<Atom> path{b};
            for (Atom cur = b; cur != h && parent.count(cur);) {
                cur = parent[cur];
                path.push_back(cur);
            }
            std::reverse(path.begin(), path.end());  // h ... b, then edge b->h closes it
            info.witness_cycle = path;
            return info;
        }
    }

    info.stratifiable = true;
    // Rank by longest path in the condensation, strict edges adding 1.
    // Tarjan emits components in reverse topological order, so a
    // forward pass over edges repeated comp_count times settles ranks;
    // simpler: relax until fixpoint (acyclic for strict purposes, plain
    // cycles share a rank via shared components).
    std::map<Atom, int> rank;
    for (const auto& a : atoms) rank[a] = 0;
    bool changed = true;
    int guard = 2 * static_cast<int>(atoms.size()) + 4;
    while (changed && guard-- > 0) {
        changed = false;
        for (const auto& [b, outs] : info.edges) {
            for (const auto& [h, strict] : outs) {
                int want = rank[b] + (strict ? 1 : 0);
                if (rank[h] < want) {
                    rank[h] = want;
                    changed = true;
                }
            }
        }
        // Atoms in one SCC share a rank.
        std::map<int, int> comp_rank;
        for (const auto& [a, r] : rank) {
            int c = comp.count(a) ? comp[a] : -1;
            auto it = comp_rank.find(c);
            comp_rank[c] = it == comp_rank.end() ? r : std::max(it->second, r);
        }
        for (auto& [a, r] : rank) {
            int cr = comp_rank[comp.count(a) ? comp[a] : -1];
            if (r != cr) {
                r = cr;
                changed = true;
            }
        }
    }
    if (guard <= 0) throw AlgebraError("stratification ranks did not settle");
    info.rank = std::move(rank);
    return info;
}

// -----------------------------------------------------------------------
// Stratified solving

namespace {

Rule valued_fact(const Atom& atom, const Value& v) {
    Rule r;
    r.label = std::nullopt;  // identity: contributes the value verbatim
    r.head = atom;
    r.body = Formula::make_term(value_to_term(v));
    return r;
}

Formula const_term(const Value& v) { return Formula::make_term(value_to_term(v)); }

}  // namespace

SolveReport solve_stratified(const Program& p) {
    auto start = std::chrono::steady_clock::now();
    require_normalized(p);
    DependencyInfo info = stratify(p);
    if (!info.stratifiable) throw AlgebraError("program is not stratifiable");

    EvalContext base_ctx = make_context(p);
    int max_rank = 0;
    for (const auto& [a, r] : info.rank) max_rank = std::max(max_rank, r);

    Interpretation acc;
    SolveStats stats;
    for (int level = 0; level <= max_rank; ++level) {
        Program layer;
        layer.declared_fact_labels = p.declared_fact_labels;
        for (const auto& [atom, value] : acc.entries()) {
            layer.rules.push_back(valued_fact(atom, value));
        }
        for (const auto& r : p.rules) {
            if (info.rank.at(*r.head) != level) continue;
            Rule flat;
            flat.label = r.label;
            flat.head = r.head;
            std::vector<Formula> kept;
            for_each_element(r.body, [&](const Formula& elem, const Formula& inner, int nots) {
                if (nots > 0) {
                    // Negations look strictly downward: already fixed.
                    kept.push_back(const_term(eval_formula(acc, elem, base_ctx)));
                } else if (inner.kind == Formula::Kind::Lit &&
                           !is_monotonic(inner.lit.query)) {
                    kept.push_back(const_term(eval_literal(acc, inner.lit, 0, base_ctx)));
                } else {
                    kept.push_back(elem);
                }
            });
            flat.body = Formula::conj(std::move(kept));
            layer.rules.push_back(std::move(flat));
        }
        acc = least_model(layer);
        stats.tp_iterations += layer.rules.size() + 1;
    }

    if (!is_stable_model(p, acc, ReductMode::Uniform))
        throw AlgebraError("stratified evaluation produced a non-stable model");

    SolveReport report;
    report.models.push_back(std::move(acc));
    report.method = "stratified";
    report.complete = true;
    stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.stats = stats;
    return report;
}

// -----------------------------------------------------------------------
// Guess and check (nec fragment)

namespace {

std::vector<Formula> body_elements(const Formula& body) {
    std::vector<Formula> out;
    for_each_element(body, [&](const Formula& elem, const Formula&, int) {
        out.push_back(elem);
    });
    return out;
}

}  // namespace

SolveReport solve_guess_check(const Program& p) {
    auto start = std::chrono::steady_clock::now();
    require_normalized(p);
    if (!classify(p).nec_fragment)
        throw AlgebraError("guess-and-check requires the nec fragment");

    // Guess points are grouped by their printed form: equal literals
    // always receive the same guess, which keeps the space at most
    // 2^(distinct negated or nec literals).
    struct Group {
        bool is_negation;
        std::vector<std::pair<std::size_t, std::size_t>> occurrences;
    };
    std::vector<std::vector<Formula>> bodies;
    std::map<std::string, std::size_t> group_index;
    std::vector<Group> groups;
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        bodies.push_back(body_elements(p.rules[ri].body));
        for (std::size_t ei = 0; ei < bodies[ri].size(); ++ei) {
            const Formula* cur = &bodies[ri][ei];
            int nots = 0;
            while (cur->kind == Formula::Kind::Not) {
                cur = &cur->kids[0];
                ++nots;
            }
            bool guessed = nots > 0 || (cur->kind == Formula::Kind::Lit &&
                                        cur->lit.query.kind == QuerySpec::Kind::Nec);
            if (!guessed) continue;
            std::string key = print_formula(bodies[ri][ei]);
            auto [it, fresh] = group_index.try_emplace(key, groups.size());
            if (fresh) groups.push_back({nots > 0, {}});
            groups[it->second].occurrences.push_back({ri, ei});
        }
    }
    if (groups.size() > 26)
        throw AlgebraError("guess space too large (" + std::to_string(groups.size()) +
                           " guess points)");

    EvalContext ctx = make_context(p);
    SolveReport report;
    report.method = "guess_check";
    report.complete = true;
    std::set<Interpretation> seen;

    std::uint64_t total = std::uint64_t{1} << groups.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++report.stats.guesses_tried;
        // Build the guessed positive program.
        Program guessed;
        guessed.declared_fact_labels = p.declared_fact_labels;
        std::vector<char> group_keep;  // parallel to groups: guessed bit
        group_keep.reserve(groups.size());
        std::map<std::pair<std::size_t, std::size_t>, bool> decision;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            bool bit = (mask >> gi) & 1;
            group_keep.push_back(bit);
            for (const auto& occ : groups[gi].occurrences) decision[occ] = bit;
        }
        for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
            bool drop_rule = false;
            std::vector<Formula> kept;
            for (std::size_t ei = 0; ei < bodies[ri].size(); ++ei) {
                auto dit = decision.find({ri, ei});
                if (dit == decision.end()) {
                    kept.push_back(bodies[ri][ei]);
                    continue;
                }
                const Formula* cur = &bodies[ri][ei];
                while (cur->kind == Formula::Kind::Not) cur = &cur->kids[0];
                bool is_neg = bodies[ri][ei].kind == Formula::Kind::Not;
                if (!dit->second) {
                    drop_rule = true;
                    break;
                }
                if (is_neg) continue;  // satisfied negation stripped
                // Kept nec literal becomes its bare atom.
                kept.push_back(Formula::make_lit(Literal{QuerySpec::one(), cur->lit.atom}));
            }
            if (drop_rule) continue;
            Rule nr;
            nr.label = p.rules[ri].label;
            nr.head = p.rules[ri].head;
            nr.body = Formula::conj(std::move(kept));
            guessed.rules.push_back(std::move(nr));
        }

        Interpretation model = least_model(guessed);

        // Verify every guess group against the candidate.
        bool ok = true;
        for (std::size_t gi = 0; gi < groups.size() && ok; ++gi) {
            const auto& [ri, ei] = groups[gi].occurrences.front();
            const Formula& elem = bodies[ri][ei];
            if (groups[gi].is_negation) {
                bool satisfied = !eval_formula(model, elem, ctx).is_zero();
                ok = satisfied == static_cast<bool>(group_keep[gi]);
            } else {
                bool holds =
                    value_leq_labelsum(model.get(elem.lit.atom), elem.lit.query.labels);
                ok = holds == static_cast<bool>(group_keep[gi]);
            }
        }
        if (!ok) continue;
        if (!is_stable_model(p, model, ReductMode::Uniform)) continue;
        if (seen.insert(model).second) report.models.push_back(std::move(model));
    }

    report.stats.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// -----------------------------------------------------------------------
// Gamma iteration fallback

SolveReport solve_gamma(const Program& p, std::size_t max_iters) {
    auto start = std::chrono::steady_clock::now();
    require_normalized(p);

    // Seeds enumerate guesses over distinct negated or non-monotonic
    // literals; equal literals share a guess.
    std::vector<std::vector<Formula>> bodies;
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        bodies.push_back(body_elements(p.rules[ri].body));
        for (std::size_t ei = 0; ei < bodies[ri].size(); ++ei) {
            const Formula& elem = bodies[ri][ei];
            bool nonmono_lit =
                elem.kind == Formula::Kind::Lit && !is_monotonic(elem.lit.query);
            if (elem.kind == Formula::Kind::Not || nonmono_lit)
                groups[print_formula(elem)].push_back({ri, ei});
        }
    }
    if (groups.size() > 26)
        throw AlgebraError("guess space too large for gamma iteration");

    SolveReport report;
    report.method = "gamma";
    report.complete = false;
    std::set<Interpretation> emitted;

    std::uint64_t total = std::uint64_t{1} << groups.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++report.stats.guesses_tried;
        // Seed: a guessed-false point drops its rule; a guessed-true
        // negation is stripped and a guessed-true non-monotonic literal
        // is replaced by its bare atom.
        Program seed;
        seed.declared_fact_labels = p.declared_fact_labels;
        std::map<std::pair<std::size_t, std::size_t>, bool> decision;
        {
            std::size_t gi = 0;
            for (const auto& [key, occs] : groups) {
                bool bit = (mask >> gi) & 1;
                for (const auto& occ : occs) decision[occ] = bit;
                ++gi;
            }
        }
        for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
            bool drop_rule = false;
            std::vector<Formula> kept;
            for (std::size_t ei = 0; ei < bodies[ri].size(); ++ei) {
                const Formula& elem = bodies[ri][ei];
                auto dit = decision.find({ri, ei});
                if (dit != decision.end()) {
                    if (!dit->second) {
                        drop_rule = true;
                        break;
                    }
                    if (elem.kind == Formula::Kind::Lit) {
                        kept.push_back(
                            Formula::make_lit(Literal{QuerySpec::one(), elem.lit.atom}));
                    }
                    continue;
                }
                kept.push_back(elem);
            }
            if (drop_rule) continue;
            Rule nr;
            nr.label = p.rules[ri].label;
            nr.head = p.rules[ri].head;
            nr.body = Formula::conj(std::move(kept));
            seed.rules.push_back(std::move(nr));
        }

        Interpretation cur = least_model(seed);
        std::set<Interpretation> trail{cur};
        for (std::size_t it = 0; it < max_iters; ++it) {
            ++report.stats.tp_iterations;
            Interpretation next = least_model(reduct(p, cur, ReductMode::Uniform));
            if (next == cur) break;
            cur = std::move(next);
            if (!trail.insert(cur).second) break;  // cycle
        }
        if (is_stable_model(p, cur, ReductMode::Uniform) && emitted.insert(cur).second) {
            report.models.push_back(std::move(cur));
        }
    }

    report.stats.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SolveReport solve_auto(const Program& p) {
    if (stratify(p).stratifiable) return solve_stratified(p);
    // Unstratifiable. If two or more components carry an internal strict
    // edge, peel the dependency-first one together with everything below
    // it via the splitting theorem, so each guess space stays local.
    std::set<Atom> atoms = p.atoms();
    auto edges = dependency_edges(p);
    std::map<Atom, int> comp = tarjan_components(atoms, edges);
    std::set<int> hard;
    for (const auto& [b, outs] : edges) {
        for (const auto& [h, strict] : outs) {
            if (strict && comp[b] == comp[h]) hard.insert(comp[b]);
        }
    }
    if (hard.size() > 1) {
        // Transitive predecessor closure per atom set, walked backwards.
        std::map<Atom, std::set<Atom>> preds;
        for (const auto& [b, outs] : edges) {
            for (const auto& [h, strict] : outs) preds[h].insert(b);
        }
        auto below = [&](int c) {
            std::deque<Atom> queue;
            std::set<Atom> seen;
            for (const auto& [a, ac] : comp) {
                if (ac == c) {
                    queue.push_back(a);
                    seen.insert(a);
                }
            }
            while (!queue.empty()) {
                Atom cur = queue.front();
                queue.pop_front();
                for (const auto& b : preds[cur]) {
                    if (seen.insert(b).second) queue.push_back(b);
                }
            }
            return seen;
        };
        // Pick a hard component whose closure contains no other hard
        // component; the condensation is acyclic so one exists.
        for (int c : hard) {
            std::set<Atom> bottom = below(c);
            bool minimal = true;
            for (const auto& a : bottom) {
                if (comp[a] != c && hard.count(comp[a])) {
                    minimal = false;
                    break;
                }
            }
            if (minimal && bottom.size() < atoms.size()) return solve_split(p, bottom);
        }
    }
    if (hard.size() == 1) {
        // Everything that does not depend on the hard core is solved
        // first without guessing; only the core and its dependants stay.
        int c = *hard.begin();
        std::map<Atom, std::set<Atom>> succs;
        for (const auto& [b, outs] : edges) {
            for (const auto& [h, strict] : outs) succs[b].insert(h);
        }
        std::deque<Atom> queue;
        std::set<Atom> reach;
        for (const auto& [a, ac] : comp) {
            if (ac == c) {
                queue.push_back(a);
                reach.insert(a);
            }
        }
        while (!queue.empty()) {
            Atom cur = queue.front();
            queue.pop_front();
            for (const auto& h : succs[cur]) {
                if (reach.insert(h).second) queue.push_back(h);
            }
        }
        std::set<Atom> bottom;
        for (const auto& a : atoms) {
            if (!reach.count(a)) bottom.insert(a);
        }
        // Splitting replaces the bottom rules by valued facts; recurse
        // only while that changes something.
        bool progress = false;
        for (const auto& r : p.rules) {
            if (bottom.count(*r.head) && r.body.kind != Formula::Kind::Term) {
                progress = true;
                break;
            }
        }
        if (!bottom.empty() && progress) return solve_split(p, bottom);
    }
    if (classify(p).nec_fragment) return solve_guess_check(p);
    return solve_gamma(p);
}

// -----------------------------------------------------------------------
// Standard-ASP brute-force oracle

std::vector<std::set<Atom>> oracle_standard(const Program& p, std::size_t atom_cap) {
    require_normalized(p);
    if (!classify(p).regular) throw AlgebraError("oracle requires a regular program");
    std::set<Atom> atom_set = p.atoms();
    std::vector<Atom> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > atom_cap) throw AlgebraError("oracle atom cap exceeded");

    std::vector<std::set<Atom>> models;
    std::uint64_t total = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::set<Atom> candidate;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if ((mask >> i) & 1) candidate.insert(atoms[i]);
        }
        // Classical GL reduct, then the classical least model.
        std::vector<std::pair<Atom, std::vector<Atom>>> positive;
        bool inconsistent = false;
        for (const auto& r : p.rules) {
            bool drop = false;
            std::vector<Atom> body;
            bool body_false = false;
            for_each_element(r.body, [&](const Formula&, const Formula& inner, int nots) {
                bool truthy;
                if (inner.kind == Formula::Kind::Lit) {
                    truthy = candidate.count(inner.lit.atom) != 0;
                    if (nots == 0) {
                        body.push_back(inner.lit.atom);
                        return;
                    }
                } else {
                    truthy = !eval_term(inner.term).is_zero();
                    if (nots == 0) {
                        if (!truthy) body_false = true;
                        return;
                    }
                }
                bool want = nots % 2 == 0;
                if (truthy != want) drop = true;
            });
            if (drop || body_false) continue;
            positive.push_back({*r.head, std::move(body)});
        }
        (void)inconsistent;
        std::set<Atom> lm;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [head, body] : positive) {
                if (lm.count(head)) continue;
                bool fire = true;
                for (const auto& b : body) {
                    if (!lm.count(b)) {
                        fire = false;
                        break;
                    }
                }
                if (fire) {
                    lm.insert(head);
                    changed = true;
                }
            }
        }
        if (lm == candidate) models.push_back(std::move(candidate));
    }
    return models;
}

// -----------------------------------------------------------------------
// Splitting

SolveReport solve_split(const Program& p, const std::set<Atom>& bottom_heads) {
    require_normalized(p);
    Program bottom, top;
    bottom.declared_fact_labels = p.declared_fact_labels;
    top.declared_fact_labels = p.declared_fact_labels;
    for (const auto& r : p.rules) {
        (bottom_heads.count(*r.head) ? bottom : top).rules.push_back(r);
    }
    std::set<Atom> bottom_atoms = bottom.atoms();
    for (const auto& r : top.rules) {
        if (bottom_atoms.count(*r.head))
            throw AlgebraError("invalid split: top head '" + *r.head +
                               "' occurs in the bottom part");
    }

    SolveReport bottom_report = solve_auto(bottom);
    SolveReport report;
    report.method = "split";
    report.complete = bottom_report.complete;
    std::set<Interpretation> seen;
    for (const auto& j : bottom_report.models) {
        Program joined = top;
        for (const auto& [atom, value] : j.entries()) {
            joined.rules.push_back(valued_fact(atom, value));
        }
        SolveReport top_report = solve_auto(joined);
        report.complete = report.complete && top_report.complete;
        report.stats.guesses_tried += top_report.stats.guesses_tried;
        for (auto& m : top_report.models) {
            if (seen.insert(m).second) report.models.push_back(std::move(m));
        }
    }
    return report;
}

// -----------------------------------------------------------------------
// Generators

Program gen_sat_program(const std::vector<CnfClause>& cnf) {
    int max_var = 0;
    for (const auto& clause : cnf) {
        if (clause.literals.empty()) throw AlgebraError("empty clause in CNF");
        std::set<int> vars;
        for (int lit : clause.literals) {
            if (lit == 0) throw AlgebraError("zero literal in CNF");
            if (vars.count(-lit)) throw AlgebraError("complementary literals in one clause");
            vars.insert(lit);
            max_var = std::max(max_var, std::abs(lit));
        }
    }
    std::string src;
    for (int k = 1; k <= max_var; ++k) {
        std::string x = "x" + std::to_string(k);
        src += x + ".\n";
        src += "t_" + x + ": " + x + " :- nec({t_" + x + "," + x + "}, " + x + ").\n";
        src += "f_" + x + ": " + x + " :- nec({f_" + x + "," + x + "}, " + x + ").\n";
    }
    std::string conj;
    for (std::size_t j = 0; j < cnf.size(); ++j) {
        std::string cj = "c" + std::to_string(j + 1);
        for (int lit : cnf[j].literals) {
            std::string x = "x" + std::to_string(std::abs(lit));
            std::string agent = (lit > 0 ? "t_" : "f_") + x;
            src += cj + " :- nec({" + agent + "," + x + "}, " + x + ").\n";
        }
        conj += (j ? ", " : "") + cj;
    }
    src += "p :- " + conj + ".\n";
    src += "p :- not p.\n";
    return parse_program(src);
}

Program gen_exp_program(int n) {
    if (n < 1) throw AlgebraError("gen_exp_program requires n >= 1");
    std::string src = "a: p1.\nb: p1.\nc: q1.\nd: q1.\n";
    for (int i = 2; i <= n; ++i) {
        std::string prev = std::to_string(i - 1), cur = std::to_string(i);
        src += "m" + cur + ": p" + cur + " :- p" + prev + ", q" + prev + ".\n";
        src += "n" + cur + ": q" + cur + " :- p" + prev + ", q" + prev + ".\n";
    }
    return parse_program(src);
}

// -----------------------------------------------------------------------
// Report serialization

std::string report_to_json(const SolveReport& r) {
    nlohmann::json j;
    j["method"] = r.method;
    j["complete"] = r.complete;
    j["models"] = nlohmann::json::array();
    for (const auto& m : r.models) {
        j["models"].push_back(nlohmann::json::parse(interp_to_json(m)));
    }
    j["stats"] = {{"tp_iterations", r.stats.tp_iterations},
                  {"guesses_tried", r.stats.guesses_tried},
                  {"wall_time", r.stats.wall_time}};
    return j.dump(2);
}

}  // namespace clp
