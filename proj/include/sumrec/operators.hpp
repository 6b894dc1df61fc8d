#pragma once

#include <sumrec/ratfunc.hpp>

#include <string>
#include <vector>

namespace sumrec {

// Linear recurrence operator sum_i coeffs[i] * N^i in the shift operator N,
// acting on a sequence x as sum_i coeffs[i](v) * x[v+i] = 0 for v >= 0.
struct RecOperator {
    int shift_var = kVarN;
    std::vector<RatFunc> coeffs;  // index i holds the coefficient of N^i

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const RatFunc& leading() const { return coeffs.back(); }
    bool is_zero() const;
    bool has_polynomial_coeffs() const;

    // Coefficients evaluated at an integer point; throws on a pole.
    std::vector<RatFunc> coeffs_at(long v) const;

    RecOperator with_argument_shift(long offset) const;  // coeffs[i](v+offset)
    RecOperator subst_param(int var, const Rational& value) const;
};

struct NormalizeNote {
    int right_shifts = 0;  // N factors removed from the right
};

// Canonical form: polynomial coefficients, collective content 1 (rational and
// polynomial), leading coefficient's leading term positive. A vanishing N^0
// coefficient right-shifts the operator (coefficients get their argument
// shifted by -1). Throws on the zero operator.
RecOperator operator_normalize(const RecOperator& op, NormalizeNote* note = nullptr);

bool operator_equal_up_to_unit(const RecOperator& a, const RecOperator& b);

// "(3*n^3+22*n^2+51*n+36)*N^3-(9*n^3+...)*N^2-..." with descending powers.
std::string operator_to_string(const RecOperator& op);
// Machine-readable: one canonical polynomial string per coefficient, index 0..order.
std::vector<std::string> operator_coeff_strings(const RecOperator& op);

RecOperator parse_operator(const std::string& text, const std::string& shift_var_name = "n");

struct AnnihilationReport {
    bool holds = false;
    std::vector<std::pair<long, std::string>> failures;  // point, residual
    std::vector<long> skipped;                           // coefficient pole or undefined
};

// Exact evaluation of sum_i c_i(v) x[v+i] over v in [begin, end].
AnnihilationReport operator_annihilates(const RecOperator& op, const std::vector<RatFunc>& values,
                                        long begin, long end);

// Largest integer root of the leading coefficient in [0, scan_to], plus one;
// 0 when there is none.
long operator_valid_from(const RecOperator& op, long scan_to);

}  // namespace sumrec
