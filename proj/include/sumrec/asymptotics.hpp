#pragma once

#include <sumrec/operators.hpp>

#include <string>
#include <vector>

namespace sumrec {

// Numerical shape of x_n ~ c * r^n * n^theta * (1 + b1/n + b2/n^2 + ...),
// fitted from exact recurrence-generated terms.
struct AsymptoticFit {
    bool conclusive = false;
    std::string message;
    double growth = 0;    // r
    double theta = 0;
    double constant = 0;  // c
    std::vector<double> corrections;  // b1, b2
    long n_lo = 0, n_hi = 0;
    double residual = 0;  // rms of the log-domain least squares
};

// Exact unroll to n_max (big rationals), conversion at >= 50 significant
// digits, Richardson-accelerated ratio estimates for r and theta, and a
// least-squares fit of log(x_n) - n log r - theta log n for c and the 1/n
// corrections. Zero or sign-alternating tails yield an inconclusive report.
AsymptoticFit estimate_growth(const RecOperator& op, const std::vector<Rational>& init, long n_max,
                              int richardson_depth = 4);

// Exact terms x_0..x_n_max from the operator and initial values.
std::vector<Rational> unroll_terms(const RecOperator& op, const std::vector<Rational>& init, long n_max);

}  // namespace sumrec
