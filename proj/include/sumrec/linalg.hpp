#pragma once

#include <sumrec/ratfunc.hpp>

#include <chrono>
#include <optional>
#include <vector>

namespace sumrec {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct TimeoutError : std::runtime_error {
    TimeoutError() : std::runtime_error("attempt timed out") {}
};

inline void check_deadline(const Deadline& d) {
    if (d && std::chrono::steady_clock::now() > *d) throw TimeoutError();
}

// Dense matrix over the rational-function field.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFunc& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const RatFunc& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<RatFunc> entries_;
};

// Basis of the right nullspace over the rational-function field, computed by
// fraction-free elimination with content removal; pivots are nonzero entries
// of lowest total degree. Vectors come back denominator-cleared, with no
// common polynomial factor and the first nonzero entry sign-positive.
// A fast modular rank probe runs first so full-rank systems exit early.
std::vector<std::vector<RatFunc>> nullspace(const RatMatrix& m, const Deadline& deadline = {});

// Exact product M*v, for soundness checks.
std::vector<RatFunc> apply_matrix(const RatMatrix& m, const std::vector<RatFunc>& v);

}  // namespace sumrec
