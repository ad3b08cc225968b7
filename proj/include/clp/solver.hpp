#ifndef CLP_SOLVER_HPP
#define CLP_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clp/semantics.hpp"

namespace clp {

struct DependencyInfo {
    // Strict edges mark dependencies through negation or a
    // non-monotonic causal literal; those must descend strictly.
    std::map<Atom, std::map<Atom, bool>> edges;  // body atom -> head atom -> strict?
    bool stratifiable = false;
    std::map<Atom, int> rank;
    std::vector<Atom> witness_cycle;  // non-empty iff unstratifiable
};

DependencyInfo stratify(const Program& p);

struct SolveStats {
    std::size_t tp_iterations = 0;
    std::size_t guesses_tried = 0;
    double wall_time = 0.0;
};

struct SolveReport {
    std::vector<Interpretation> models;
    std::string method;  // stratified | guess_check | gamma
    bool complete = false;
    SolveStats stats;
};

std::string report_to_json(const SolveReport& r);

/// Bottom-up evaluation by strata; exactly one model.
SolveReport solve_stratified(const Program& p);

/// Exhaustive guess over negations and nec literals with the four-way
/// verification; complete on the nec fragment.
SolveReport solve_guess_check(const Program& p);

/// Sound-but-incomplete iteration of I -> least_model(reduct(P, I));
/// every emitted model is verified.
SolveReport solve_gamma(const Program& p, std::size_t max_iters = 64);

/// stratified if stratifiable, else guess_check on the nec fragment,
/// else gamma.
SolveReport solve_auto(const Program& p);

/// Classical stable models of the unlabeled regular program, by
/// exhaustive candidate enumeration (atom count capped).
std::vector<std::set<Atom>> oracle_standard(const Program& p, std::size_t atom_cap = 20);

/// Splitting: bottom_heads names the atoms solved first; their models
/// become valued facts for the rest. The partition is rejected unless
/// no rule head outside bottom_heads occurs anywhere in the bottom part.
SolveReport solve_split(const Program& p, const std::set<Atom>& bottom_heads);

struct CnfClause {
    // Positive var index k -> literal x_k; negative -> not x_k. 1-based.
    std::vector<int> literals;
};

Program gen_sat_program(const std::vector<CnfClause>& cnf);
Program gen_exp_program(int n);

}  // namespace clp

#endif  // CLP_SOLVER_HPP
