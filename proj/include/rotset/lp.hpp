#pragma once

#include "rotset/rational.hpp"

#include <optional>
#include <vector>

namespace rotset::lp {

/// minimize c.x  subject to  A x = b,  x >= 0.
/// Rows of A must all have the same length as c.
struct Problem {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::infeasible;
    Rational objective;
    std::vector<Rational> x;
};

/// Dense two-phase simplex over the rationals. Bland's rule for both the
/// entering and leaving variable, so it terminates without perturbation.
Solution solve(const Problem& problem);

/// Phase one only. Returns a feasible point or nullopt.
std::optional<std::vector<Rational>> find_feasible(const std::vector<std::vector<Rational>>& a,
                                                   const std::vector<Rational>& b);

}  // namespace rotset::lp
