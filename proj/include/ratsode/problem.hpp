#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ratsode/expr.hpp"

namespace ratsode {

struct ProblemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solve request: the equation F(z, w, wp) = 0 (as a polynomial; rational
// z-coefficients are cleared on load), an optional curve parametrization
// w = r1(t,z), wp = r2(t,z), and sampling options for the genus test.
struct Problem {
    MultiPoly equation;
    std::optional<std::pair<RatFunc, RatFunc>> parametrization;
    int samples = 5;
    unsigned long seed = 0;
};

// Line-oriented key/value format:
//   equation: <expr in z, w, wp>      (required)
//   param_w:  <expr in t, z>          (optional; required together with param_wp)
//   param_wp: <expr in t, z>
//   samples:  <positive integer>      (default 5)
//   seed:     <unsigned integer>      (default 0)
// Lines starting with # are comments.
Problem parse_problem_text(const std::string& text);
Problem load_problem(const std::string& path);

}  // namespace ratsode
