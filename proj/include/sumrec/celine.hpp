#pragma once

#include <sumrec/linalg.hpp>
#include <sumrec/oracle.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sumrec {

struct CelineProblem {
    HyperTerm term;
    HoloSeq seq;
    long d = 1;                     // power applied to the sequence; 0 is the classical method
    int I_max = 6;                  // largest recurrence order tried
    std::optional<int> J_max;       // shift window bound; default per order: I + D + d
    double timeout_seconds = 60.0;  // budget per (I, J) attempt
    std::size_t row_cap = 200000;   // expression-swell guard on collected monomials
    int I_min = 1;                  // resume point for checkpointed retries
};

// Linear system in the unknowns y_{i,j}(n): rows are collected coefficients
// of k-power x a-monomial combinations, entries are free of k and of the
// sequence symbols.
struct AnsatzSystem {
    std::vector<std::pair<int, int>> unknowns;        // column labels (i, j)
    std::vector<std::pair<int, int>> row_keys;        // (k power, a-monomial index)
    std::vector<std::vector<int>> a_monomials;        // exponent vectors over a_k..a_{k+D-1}
    RatMatrix matrix{0, 0};
};

struct AttemptDiag {
    int I = 0, J = 0;
    std::size_t rows = 0, cols = 0;
    double seconds = 0;
    std::string outcome;  // solved | no-solution | degenerate | timeout | verify-failed | too-large
};

struct CelineResult {
    RecOperator op;  // normalized, shift variable n
    int I_used = 0, J_used = 0;
    std::vector<RatFunc> certificate;              // y values, matching unknown labels
    std::vector<std::pair<int, int>> unknown_labels;
    VerifyReport verification;
    std::vector<AttemptDiag> attempts;
};

struct NotFoundError : std::runtime_error {
    std::vector<AttemptDiag> attempts;
    bool all_timeouts = false;
    explicit NotFoundError(std::string what, std::vector<AttemptDiag> a, bool timeouts)
        : std::runtime_error(std::move(what)), attempts(std::move(a)), all_timeouts(timeouts) {}
};

AnsatzSystem build_system(const HyperTerm& h, const RecOperator& seq_rec, long d, int I, int J,
                          const Deadline& deadline = {}, std::size_t row_cap = 200000);

// Nonzero nullspace vector whose induced operator has the lowest order, then
// the lowest total coefficient degree, then the lowest basis index; nullopt
// when the system has full rank.
std::optional<std::vector<RatFunc>> solve_ansatz(const AnsatzSystem& sys, const Deadline& deadline = {});

// Coefficient of N^i is sum_j y_{i,j}; throws std::domain_error when every
// coefficient collapses to zero (degenerate certificate). A right shift
// during normalization (note) limits where the relation binds.
RecOperator extract_recurrence(const std::vector<RatFunc>& certificate,
                               const std::vector<std::pair<int, int>>& unknowns, int I,
                               NormalizeNote* note = nullptr);

// Search I ascending, J ascending; each attempt runs under the per-attempt
// timeout; the first solved and oracle-verified operator wins.
CelineResult findrec(const CelineProblem& problem);

}  // namespace sumrec
