#pragma once

#include <sumrec/operators.hpp>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace sumrec {

// A sequence defined by a recurrence operator in k plus initial values.
// Extra initial values beyond the order are taken as ground truth (used when
// chaining a discovered operator whose small-k relation may be void).
class HoloSeq {
public:
    HoloSeq(RecOperator rec_in_k, std::vector<RatFunc> initial, std::string name);
    HoloSeq(const HoloSeq& o);
    HoloSeq& operator=(const HoloSeq& o);

    int order() const { return rec_.order(); }
    const RecOperator& rec() const { return rec_; }
    const std::string& name() const { return name_; }

    // a_0 .. a_upto, exact; parameters stay symbolic. Throws a
    // singular-recurrence error naming the index when the leading
    // coefficient vanishes at a needed step.
    std::vector<RatFunc> eval(long upto) const;

    HoloSeq subst_param(int var, const Rational& value) const;

private:
    RecOperator rec_;
    std::vector<RatFunc> initial_;
    std::string name_;
    mutable std::mutex mu_;
    mutable std::vector<RatFunc> memo_;
};

// c[j][m] with a_{k+j} = sum_m c[j][m](k) * a_{k+m} for 0 <= m < D, obtained
// by repeated substitution of the recurrence; identity for j < D.
std::vector<std::vector<RatFunc>> shift_reduce(const RecOperator& rec, int J);

// Stock sequences used by the drivers and tests.
HoloSeq fibonacci_seq();
HoloSeq constant_one_seq();
// (k+2) a_{k+2} = (2k+3) a_{k+1} + (3k+3) a_k with a_0 = a_1 = 1; this is the
// central trinomial recurrence re-anchored at the base index.
HoloSeq central_trinomial_seq();
HoloSeq m_fibonacci_seq(const std::string& param = "m");

}  // namespace sumrec
