#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "clp/lang.hpp"
#include "clp/semantics.hpp"
#include "clp/solver.hpp"

namespace {

struct Options {
    std::string input;
    std::string mode = "auto";
    std::string reduct_mode = "uniform";
    std::size_t max_models = 1000000;
    std::string output = "text";
    std::string default_label = "head";
    int jobs = 1;
    std::string model_file;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

clp::Program load_program(const Options& opt) {
    auto dflt = opt.default_label == "one" ? clp::DefaultLabel::One : clp::DefaultLabel::Head;
    return clp::normalize(clp::parse_program(slurp(opt.input), dflt));
}

clp::ReductMode reduct_mode(const Options& opt) {
    return opt.reduct_mode == "selective" ? clp::ReductMode::Selective
                                          : clp::ReductMode::Uniform;
}

clp::SolveReport run_solver(const clp::Program& p, const Options& opt) {
    if (opt.mode == "stratified") return clp::solve_stratified(p);
    if (opt.mode == "guess") return clp::solve_guess_check(p);
    if (opt.mode == "gamma") return clp::solve_gamma(p);
    return clp::solve_auto(p);
}

void print_models_text(const clp::SolveReport& report, const Options& opt) {
    std::cout << "method: " << report.method
              << (report.complete ? " (complete)" : " (incomplete)") << "\n";
    std::size_t shown = std::min<std::size_t>(report.models.size(), opt.max_models);
    for (std::size_t i = 0; i < shown; ++i) {
        std::cout << "model " << (i + 1) << ":\n";
        for (const auto& [atom, value] : report.models[i].entries()) {
            std::cout << "  " << atom << " = " << clp::render_value(value) << "\n";
        }
    }
    if (report.models.empty()) std::cout << "no causal stable model\n";
}

int cmd_solve(const Options& opt) {
    clp::Program p = load_program(opt);
    clp::SolveReport report = run_solver(p, opt);
    if (report.models.size() > opt.max_models) report.models.resize(opt.max_models);
    if (opt.output == "json") {
        std::cout << clp::report_to_json(report) << "\n";
    } else {
        print_models_text(report, opt);
    }
    return report.models.empty() ? 1 : 0;
}

int cmd_query(const Options& opt, const std::string& expr) {
    clp::Program p = load_program(opt);
    clp::Formula f = clp::parse_formula_text(expr);
    clp::EvalContext ctx = clp::make_context(p);
    std::vector<clp::Interpretation> models;
    if (!opt.model_file.empty()) {
        models.push_back(clp::interp_from_json(slurp(opt.model_file)));
    } else {
        clp::SolveReport report = run_solver(p, opt);
        models = report.models;
    }
    if (models.empty()) {
        std::cout << "no causal stable model\n";
        return 1;
    }
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < models.size() && i < opt.max_models; ++i) {
        clp::Value v = clp::eval_formula(models[i], f, ctx);
        bool satisfied = !v.is_zero();
        if (opt.output == "json") {
            out.push_back({{"model", i + 1},
                           {"value", clp::render_value(v)},
                           {"satisfied", satisfied}});
        } else {
            std::cout << "model " << (i + 1) << ": "
                      << (satisfied ? "true" : "false") << ", value = "
                      << clp::render_value(v) << "\n";
        }
    }
    if (opt.output == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_check(const Options& opt) {
    clp::Program p = load_program(opt);
    clp::Interpretation i = clp::interp_from_json(slurp(opt.model_file));
    bool model = clp::is_model(i, p);
    bool stable = clp::is_stable_model(p, i, reduct_mode(opt));
    bool supported = model && clp::is_supported(p, i);
    if (opt.output == "json") {
        nlohmann::json j = {{"model", model}, {"stable", stable}, {"supported", supported}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "model: " << (model ? "true" : "false") << "\n"
                  << "stable: " << (stable ? "true" : "false") << "\n"
                  << "supported: " << (supported ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_strata(const Options& opt) {
    clp::Program p = load_program(opt);
    clp::DependencyInfo info = clp::stratify(p);
    if (!info.stratifiable) {
        std::cout << "unstratifiable";
        if (!info.witness_cycle.empty()) {
            std::cout << ": cycle";
            for (const auto& a : info.witness_cycle) std::cout << " " << a;
        }
        std::cout << "\n";
        return 0;
    }
    std::map<int, std::vector<clp::Atom>> by_rank;
    for (const auto& [atom, rank] : info.rank) by_rank[rank].push_back(atom);
    for (const auto& [rank, atoms] : by_rank) {
        std::cout << "stratum " << rank << ":";
        for (const auto& a : atoms) std::cout << " " << a;
        std::cout << "\n";
    }
    return 0;
}

int cmd_normalize(const Options& opt) {
    std::cout << clp::print_program(load_program(opt));
    return 0;
}

int cmd_dot(const Options& opt, const std::string& atom) {
    clp::Program p = load_program(opt);
    clp::Interpretation model;
    if (!opt.model_file.empty()) {
        model = clp::interp_from_json(slurp(opt.model_file));
    } else {
        clp::SolveReport report = run_solver(p, opt);
        if (report.models.empty()) {
            std::cout << "no causal stable model\n";
            return 1;
        }
        model = report.models[0];
    }
    const clp::Value& v = model.get(atom);
    std::cout << "digraph \"" << atom << "\" {\n";
    int idx = 0;
    for (const auto& g : v.causes()) {
        std::cout << "  subgraph cluster_" << idx << " {\n";
        std::cout << "    label=\"cause " << idx << "\";\n";
        clp::EdgeSet reduced = clp::transitive_reduction(g);
        std::set<std::string> drawn;
        for (const auto& [a, b] : reduced) {
            std::cout << "    \"" << a << "_" << idx << "\" -> \"" << b << "_" << idx
                      << "\";\n";
            drawn.insert(a);
            drawn.insert(b);
        }
        for (const auto& vertex : g.vertices()) {
            if (!drawn.count(vertex))
                std::cout << "    \"" << vertex << "_" << idx << "\";\n";
        }
        for (const auto& vertex : g.vertices()) {
            std::cout << "    \"" << vertex << "_" << idx << "\" [label=\"" << vertex
                      << "\"];\n";
        }
        std::cout << "  }\n";
        ++idx;
    }
    std::cout << "}\n";
    return 0;
}

int cmd_oracle(const Options& opt) {
    clp::Program p = load_program(opt);
    auto models = clp::oracle_standard(p);
    for (std::size_t i = 0; i < models.size(); ++i) {
        std::cout << "model " << (i + 1) << ": {";
        bool first = true;
        for (const auto& a : models[i]) {
            if (!first) std::cout << ", ";
            std::cout << a;
            first = false;
        }
        std::cout << "}\n";
    }
    if (models.empty()) std::cout << "no stable model\n";
    return models.empty() ? 1 : 0;
}

int cmd_project(const Options& opt) {
    clp::Program p = load_program(opt);
    clp::SolveReport report = run_solver(p, opt);
    for (std::size_t i = 0; i < report.models.size() && i < opt.max_models; ++i) {
        auto proj = clp::two_valued(report.models[i]);
        std::cout << "model " << (i + 1) << ": {";
        bool first = true;
        for (const auto& [atom, bit] : proj) {
            if (!bit) continue;
            if (!first) std::cout << ", ";
            std::cout << atom;
            first = false;
        }
        std::cout << "}\n";
    }
    if (report.models.empty()) {
        std::cout << "no causal stable model\n";
        return 1;
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", opt.input, "program file, or - for stdin")->required();
    cmd->add_option("--mode", opt.mode, "solver: auto|stratified|guess|gamma")
        ->check(CLI::IsMember({"auto", "stratified", "guess", "gamma"}));
    cmd->add_option("--reduct", opt.reduct_mode, "reduct mode: uniform|selective")
        ->check(CLI::IsMember({"uniform", "selective"}));
    cmd->add_option("--max-models", opt.max_models, "cap on reported models")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt.output, "output format: text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_option("--default-label", opt.default_label,
                    "label for unlabeled rules: head|one")
        ->check(CLI::IsMember({"head", "one"}));
    cmd->add_option("--jobs", opt.jobs, "worker count (output is order-stable)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal logic program solver"};
    app.require_subcommand(1);
    Options opt;
    std::string query_expr, dot_atom;

    auto* solve = app.add_subcommand("solve", "enumerate causal stable models");
    add_common(solve, opt);

    auto* query = app.add_subcommand("query", "evaluate a causal literal per model");
    add_common(query, opt);
    query->add_option("expr", query_expr, "query expression")->required();
    query->add_option("--model", opt.model_file, "model JSON instead of solving");

    auto* check = app.add_subcommand("check", "verify a model file");
    add_common(check, opt);
    check->add_option("--model", opt.model_file, "model JSON file")->required();

    auto* strata = app.add_subcommand("strata", "show stratification");
    add_common(strata, opt);

    auto* norm = app.add_subcommand("normalize", "print the normalized program");
    add_common(norm, opt);

    auto* dot = app.add_subcommand("dot", "emit DOT for an atom's causes");
    add_common(dot, opt);
    dot->add_option("atom", dot_atom, "atom to draw")->required();
    dot->add_option("--model", opt.model_file, "model JSON instead of solving");

    auto* oracle = app.add_subcommand("oracle", "brute-force standard stable models");
    add_common(oracle, opt);

    auto* project = app.add_subcommand("project", "two-valued projection of models");
    add_common(project, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (query->parsed()) return cmd_query(opt, query_expr);
        if (check->parsed()) return cmd_check(opt);
        if (strata->parsed()) return cmd_strata(opt);
        if (norm->parsed()) return cmd_normalize(opt);
        if (dot->parsed()) return cmd_dot(opt, dot_atom);
        if (oracle->parsed()) return cmd_oracle(opt);
        if (project->parsed()) return cmd_project(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
