#include "clp/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace clp {

bool is_reserved_label(const std::string& name) {
    return name == "0" || name == "1";
}

void check_label(const std::string& name) {
    if (name.empty()) throw AlgebraError("empty label");
    if (is_reserved_label(name)) throw AlgebraError("reserved label: " + name);
}

namespace {

// Warshall-style closure; graphs here are desk-scale so cubic is fine.
void close(EdgeSet& edges) {
    std::set<std::string> verts;
    for (const auto& e : edges) {
        verts.insert(e.first);
        verts.insert(e.second);
    }
    for (const auto& v : verts) edges.insert({v, v});
    bool changed = true;
    while (changed) {
        changed = false;
        EdgeSet next = edges;
        for (const auto& [a, b] : edges) {
            for (const auto& v : verts) {
                if (edges.count({b, v}) && next.insert({a, v}).second) changed = true;
            }
        }
        edges.swap(next);
    }
}

}  // namespace

void Cause::refresh_fingerprint() {
    std::hash<std::string> h;
    fp_ = 0;
    for (const auto& [a, b] : edges_) {
        std::uint64_t x = h(a) * 0x9e3779b97f4a7c15ULL + h(b);
        fp_ |= std::uint64_t{1} << (x % 64);
    }
}

Cause Cause::label(const std::string& name) {
    check_label(name);
    Cause g;
    g.edges_.insert({name, name});
    g.refresh_fingerprint();
    return g;
}

Cause Cause::from_edges(EdgeSet edges) {
    Cause g;
    g.edges_ = std::move(edges);
    close(g.edges_);
    g.refresh_fingerprint();
    return g;
}

std::set<std::string> Cause::vertices() const {
    std::set<std::string> verts;
    for (const auto& e : edges_) {
        verts.insert(e.first);
        verts.insert(e.second);
    }
    return verts;
}

bool Cause::has_vertex(const std::string& l) const {
    return edges_.count({l, l}) != 0;
}

bool Cause::operator<(const Cause& other) const {
    if (edges_.size() != other.edges_.size()) return edges_.size() < other.edges_.size();
    return edges_ < other.edges_;
}

bool cause_leq(const Cause& g, const Cause& h) {
    if (h.fingerprint() & ~g.fingerprint()) return false;
    return std::includes(g.edges().begin(), g.edges().end(),
                         h.edges().begin(), h.edges().end());
}

Cause product_cause(const Cause& g, const Cause& h) {
    EdgeSet edges = g.edges();
    edges.insert(h.edges().begin(), h.edges().end());
    return Cause::from_edges(std::move(edges));
}

Cause apply_cause(const Cause& g, const Cause& h) {
    EdgeSet edges = g.edges();
    edges.insert(h.edges().begin(), h.edges().end());
    for (const auto& a : g.vertices())
        for (const auto& b : h.vertices()) edges.insert({a, b});
    return Cause::from_edges(std::move(edges));
}

Value Value::one() {
    Value v;
    v.causes_.insert(Cause::unit());
    return v;
}

Value Value::from_cause(Cause g) {
    Value v;
    v.causes_.insert(std::move(g));
    return v;
}

Value Value::from_causes(std::vector<Cause> causes) {
    // Sorting by edge count means a cause can only be absorbed by an
    // earlier kept one (fewer edges = larger in the lattice).
    std::sort(causes.begin(), causes.end());
    causes.erase(std::unique(causes.begin(), causes.end(),
                             [](const Cause& a, const Cause& b) { return a == b; }),
                 causes.end());
    Value v;
    std::vector<const Cause*> kept;
    for (auto& g : causes) {
        bool maximal = true;
        for (const Cause* h : kept) {
            if (h->edges().size() >= g.edges().size()) break;
            if (cause_leq(g, *h)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            auto [it, inserted] = v.causes_.insert(std::move(g));
            if (inserted) kept.push_back(&*it);
        }
    }
    return v;
}

Value sum_value(const Value& t, const Value& u) {
    std::vector<Cause> all(t.causes().begin(), t.causes().end());
    all.insert(all.end(), u.causes().begin(), u.causes().end());
    return Value::from_causes(std::move(all));
}

Value product_value(const Value& t, const Value& u) {
    std::vector<Cause> all;
    for (const auto& g : t.causes())
        for (const auto& h : u.causes()) all.push_back(product_cause(g, h));
    return Value::from_causes(std::move(all));
}

Value apply_value(const Value& t, const Value& u) {
    std::vector<Cause> all;
    for (const auto& g : t.causes())
        for (const auto& h : u.causes()) all.push_back(apply_cause(g, h));
    return Value::from_causes(std::move(all));
}

bool value_leq(const Value& t, const Value& u) {
    for (const auto& g : t.causes()) {
        bool covered = false;
        for (const auto& h : u.causes()) {
            if (cause_leq(g, h)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool value_leq_labelsum(const Value& t, const std::set<std::string>& labels) {
    for (const auto& g : t.causes()) {
        bool covered = false;
        for (const auto& l : labels) {
            if (g.has_vertex(l)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

Term Term::make_label(std::string name) {
    check_label(name);
    Term t;
    t.kind = Kind::Label;
    t.label = std::move(name);
    return t;
}

Term Term::product(std::vector<Term> args) {
    Term t;
    t.kind = Kind::Product;
    t.args = std::move(args);
    return t;
}

Term Term::sum(std::vector<Term> args) {
    Term t;
    t.kind = Kind::Sum;
    t.args = std::move(args);
    return t;
}

Term Term::apply(Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::Apply;
    t.args.push_back(std::move(lhs));
    t.args.push_back(std::move(rhs));
    return t;
}

Value eval_term(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Label: return Value::from_cause(Cause::label(t.label));
        case Term::Kind::One: return Value::one();
        case Term::Kind::Zero: return Value::zero();
        case Term::Kind::Product: {
            Value acc = Value::one();
            for (const auto& a : t.args) acc = product_value(acc, eval_term(a));
            return acc;
        }
        case Term::Kind::Sum: {
            Value acc = Value::zero();
            for (const auto& a : t.args) acc = sum_value(acc, eval_term(a));
            return acc;
        }
        case Term::Kind::Apply:
            return apply_value(eval_term(t.args[0]), eval_term(t.args[1]));
    }
    throw AlgebraError("bad term kind");
}

namespace {

// Term grammar: sum > product > apply in loosenesss, '.' and the UTF-8
// middle dot both mean application.
class TermParser {
public:
    explicit TermParser(const std::string& src) : src_(src) {}

    Term parse() {
        Term t = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return t;
    }

private:
    Term parse_sum() {
        std::vector<Term> args{parse_product()};
        while (peek_op('+')) {
            ++pos_;
            args.push_back(parse_product());
        }
        return args.size() == 1 ? args[0] : Term::sum(std::move(args));
    }

    Term parse_product() {
        std::vector<Term> args{parse_apply()};
        while (peek_op('*')) {
            ++pos_;
            args.push_back(parse_apply());
        }
        return args.size() == 1 ? args[0] : Term::product(std::move(args));
    }

    Term parse_apply() {
        Term t = parse_atomic();
        while (true) {
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == '.') {
                ++pos_;
            } else if (pos_ + 1 < src_.size() &&
                       static_cast<unsigned char>(src_[pos_]) == 0xC2 &&
                       static_cast<unsigned char>(src_[pos_ + 1]) == 0xB7) {
                pos_ += 2;
            } else {
                break;
            }
            t = Term::apply(std::move(t), parse_atomic());
        }
        return t;
    }

    Term parse_atomic() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of term");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = parse_sum();
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return t;
        }
        std::string name = parse_name();
        if (name == "0") return Term::zero();
        if (name == "1") return Term::one();
        return Term::make_label(std::move(name));
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ == start) fail("expected label");
        std::string name = src_.substr(start, pos_ - start);
        // Labels may carry a parenthesized argument list, e.g. shoot(suzy).
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '(' && name != "0" && name != "1") {
            std::size_t probe = pos_ + 1;
            std::string args;
            while (true) {
                while (probe < src_.size() &&
                       std::isspace(static_cast<unsigned char>(src_[probe]))) ++probe;
                std::size_t s = probe;
                while (probe < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[probe])) ||
                        src_[probe] == '_')) ++probe;
                if (probe == s) return name;  // not an argument list
                args += src_.substr(s, probe - s);
                while (probe < src_.size() &&
                       std::isspace(static_cast<unsigned char>(src_[probe]))) ++probe;
                if (probe < src_.size() && src_[probe] == ',') {
                    args += ',';
                    ++probe;
                    continue;
                }
                if (probe < src_.size() && src_[probe] == ')') {
                    pos_ = probe + 1;
                    return name + "(" + args + ")";
                }
                return name;
            }
        }
        return name;
    }

    bool peek_op(char op) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == op;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw AlgebraError("term parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(const std::string& src) { return TermParser(src).parse(); }

Term value_to_term(const Value& v) {
    if (v.is_zero()) return Term::zero();
    std::vector<Term> addends;
    for (const auto& g : v.causes()) {
        if (g.is_unit()) {
            addends.push_back(Term::one());
            continue;
        }
        std::vector<Term> factors;
        std::set<std::string> covered;
        for (const auto& [a, b] : g.edges()) {
            if (a == b) continue;
            factors.push_back(Term::apply(Term::make_label(a), Term::make_label(b)));
            covered.insert(a);
            covered.insert(b);
        }
        for (const auto& l : g.vertices()) {
            if (!covered.count(l)) factors.push_back(Term::make_label(l));
        }
        addends.push_back(factors.size() == 1 ? factors[0] : Term::product(std::move(factors)));
    }
    return addends.size() == 1 ? addends[0] : Term::sum(std::move(addends));
}

EdgeSet transitive_reduction(const Cause& g) {
    EdgeSet reduced;
    for (const auto& [a, b] : g.edges()) {
        if (a == b) continue;
        bool shortcut = false;
        for (const auto& v : g.vertices()) {
            if (v != a && v != b && g.edges().count({a, v}) && g.edges().count({v, b})) {
                shortcut = true;
                break;
            }
        }
        if (!shortcut) reduced.insert({a, b});
    }
    return reduced;
}

std::string render_cause(const Cause& g) {
    if (g.is_unit()) return "1";
    EdgeSet reduced = transitive_reduction(g);
    std::map<std::string, std::vector<std::string>> succ;
    std::set<std::string> has_pred;
    for (const auto& [a, b] : reduced) {
        succ[a].push_back(b);
        has_pred.insert(b);
    }
    // Every maximal path of the reduction becomes one application chain;
    // their product recovers the graph exactly.
    std::vector<std::string> chains;
    std::vector<std::string> path;
    auto walk = [&](auto&& self, const std::string& v) -> void {
        path.push_back(v);
        auto it = succ.find(v);
        if (it == succ.end() || it->second.empty()) {
            std::string chain = path[0];
            for (std::size_t i = 1; i < path.size(); ++i) chain += "·" + path[i];
            chains.push_back(std::move(chain));
        } else {
            for (const auto& next : it->second) self(self, next);
        }
        path.pop_back();
    };
    for (const auto& v : g.vertices()) {
        if (!has_pred.count(v)) walk(walk, v);
    }
    std::sort(chains.begin(), chains.end());
    std::string out;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (i) out += "*";
        bool atomic = chains.size() == 1 || chains[i].find("·") == std::string::npos;
        out += atomic ? chains[i] : "(" + chains[i] + ")";
    }
    return out;
}

std::string render_value(const Value& v) {
    if (v.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& g : v.causes()) parts.push_back(render_cause(g));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

}  // namespace clp
