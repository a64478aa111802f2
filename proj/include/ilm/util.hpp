#pragma once

#include <functional>
#include <string>

namespace ilm {

// |a - b| <= rel * max(|a|, |b|). Symmetric, and exact zeros compare equal.
bool close_rel(double a, double b, double rel);

bool close_abs(double a, double b, double tol);

// Shortest decimal text that parses back to the identical double.
std::string to_shortest(double v);

// Plain bisection on [lo, hi]; f(lo) and f(hi) must have opposite (weak)
// signs. Runs until the bracket is narrower than xtol and returns the
// midpoint of the final bracket.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol);

}  // namespace ilm
