#pragma once

#include <sumrec/hyperterm.hpp>
#include <sumrec/operators.hpp>
#include <sumrec/sequences.hpp>

#include <string>
#include <vector>

namespace sumrec {

// x_n = sum_{k=0..n} a_k^d H(n,k), exact; the k range is the natural support
// of the binomial factors, so shifting the summation index does not change
// the sum. Parameters propagate symbolically.
std::vector<RatFunc> brute_sum(const HoloSeq& a, const HyperTerm& h, long d, long n_max);

// Closed walks of length 0..n_max on Z^dim using all (3^dim - 1) nonzero
// steps with coordinates in {-1,0,1}. Pure lattice dynamic programming,
// independent of the symbolic machinery.
std::vector<Integer> king_walk_counts(int dim, long n_max);
Integer king_walk_count(int dim, long n);

// Middle coefficient of (1+z+z^2)^k for k = 0..kmax, by direct expansion.
std::vector<Integer> trinomial_central(long kmax);

struct VerifyReport {
    bool holds = false;
    long checked_upto = 0;
    long valid_from = 0;              // 0 when the relation holds everywhere checked
    std::vector<long> skipped;        // leading-coefficient zeros with nonzero residual
    std::vector<std::pair<long, std::string>> failures;
};

// Brute-force values, then exact annihilation; residual mismatches at integer
// roots of the leading coefficient are reported as skipped with the validity
// threshold set past them.
VerifyReport verify_operator(const RecOperator& op, const HoloSeq& a, const HyperTerm& h, long d,
                             long n_check);

}  // namespace sumrec
