#include "ratsode/problem.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace ratsode {

namespace {

void check_vars(const RatFunc& r, std::initializer_list<Var> allowed, const std::string& key) {
    auto ok = [&](Var v) {
        for (Var a : allowed) {
            if (a == v) return true;
        }
        return false;
    };
    for (Var v : r.num().vars()) {
        if (!ok(v)) throw ProblemError(key + ": unexpected variable '" + var_name(v) + "'");
    }
    for (Var v : r.den().vars()) {
        if (!ok(v)) throw ProblemError(key + ": unexpected variable '" + var_name(v) + "'");
    }
}

}  // namespace

Problem parse_problem_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw ProblemError("line " + std::to_string(lineno) + ": expected 'key: value'");
        }
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value = line.substr(colon + 1);
        size_t vfirst = value.find_first_not_of(" \t");
        value = vfirst == std::string::npos ? "" : value.substr(vfirst);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r')) {
            value.pop_back();
        }
        if (kv.count(key)) throw ProblemError("duplicate key '" + key + "'");
        kv[key] = value;
    }
    for (const auto& [key, value] : kv) {
        if (key != "equation" && key != "param_w" && key != "param_wp" && key != "samples" &&
            key != "seed") {
            throw ProblemError("unknown key '" + key + "'");
        }
    }
    if (!kv.count("equation")) throw ProblemError("missing \"equation\" key");

    Problem p;
    RatFunc eq;
    try {
        eq = parse_ratfunc(kv["equation"]);
    } catch (const ParseError& e) {
        throw ProblemError(std::string("equation: ") + e.what());
    }
    check_vars(eq, {Var::z, Var::w, Var::wp}, "equation");
    if (eq.den().depends_on(Var::w) || eq.den().depends_on(Var::wp)) {
        throw ProblemError("equation: denominator may only involve z");
    }
    // Clear rational z-coefficients; the zero set in (w, wp) over Q(z) is unchanged.
    p.equation = eq.num().primitive_rational();
    if (p.equation.degree(Var::wp) < 1) {
        throw ProblemError("equation: degree in wp must be positive");
    }

    bool has_w = kv.count("param_w") > 0, has_wp = kv.count("param_wp") > 0;
    if (has_w != has_wp) {
        throw ProblemError("param_w and param_wp must be given together");
    }
    if (has_w) {
        RatFunc r1, r2;
        try {
            r1 = parse_ratfunc(kv["param_w"]);
            r2 = parse_ratfunc(kv["param_wp"]);
        } catch (const ParseError& e) {
            throw ProblemError(std::string("parametrization: ") + e.what());
        }
        check_vars(r1, {Var::t, Var::z}, "param_w");
        check_vars(r2, {Var::t, Var::z}, "param_wp");
        if (!r1.depends_on(Var::t) || !r2.depends_on(Var::t)) {
            throw ProblemError("parametrization components must involve t");
        }
        p.parametrization = std::make_pair(r1, r2);
    }
    if (kv.count("samples")) {
        try {
            p.samples = std::stoi(kv["samples"]);
        } catch (const std::exception&) {
            throw ProblemError("samples: not an integer");
        }
        if (p.samples < 1) throw ProblemError("samples: must be positive");
    }
    if (kv.count("seed")) {
        try {
            p.seed = std::stoul(kv["seed"]);
        } catch (const std::exception&) {
            throw ProblemError("seed: not an unsigned integer");
        }
    }
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

}  // namespace ratsode
