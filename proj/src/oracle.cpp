#include <sumrec/oracle.hpp>

#include <stdexcept>

namespace sumrec {

std::vector<RatFunc> brute_sum(const HoloSeq& a, const HyperTerm& h, long d, long n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (d < 0) throw std::invalid_argument("exponent must be >= 0");
    std::vector<RatFunc> avals = a.eval(n_max);
    std::vector<RatFunc> apow;
    apow.reserve(avals.size());
    for (auto& v : avals) apow.push_back(v.pow(d));
    std::vector<RatFunc> out;
    out.reserve(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        RatFunc acc;
        for (long k = 0; k <= n; ++k) {
            RatFunc hv = h.eval(n, k);
            if (hv.is_zero()) continue;
            acc += apow[static_cast<std::size_t>(k)] * hv;
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<Integer> king_walk_counts(int dim, long n_max) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) out.push_back(king_walk_count(dim, n));
    return out;
}

Integer king_walk_count(int dim, long n) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (n == 0) return Integer(1);
    long R = n / 2;
    long side = 2 * R + 1;
    double cells_d = 1;
    for (int t = 0; t < dim; ++t) cells_d *= static_cast<double>(side);
    if (cells_d > 5e7) throw std::domain_error("king walk grid too large for dim/n");
    std::size_t cells = 1;
    for (int t = 0; t < dim; ++t) cells *= static_cast<std::size_t>(side);

    std::vector<std::size_t> stride(static_cast<std::size_t>(dim));
    stride[0] = 1;
    for (int t = 1; t < dim; ++t)
        stride[static_cast<std::size_t>(t)] = stride[static_cast<std::size_t>(t - 1)] * static_cast<std::size_t>(side);

    std::vector<Integer> cur(cells), box(cells), tmp(cells);
    std::size_t origin = 0;
    for (int t = 0; t < dim; ++t) origin += static_cast<std::size_t>(R) * stride[static_cast<std::size_t>(t)];
    cur[origin] = 1;

    for (long step = 0; step < n; ++step) {
        box = cur;
        for (int axis = 0; axis < dim; ++axis) {
            std::size_t s = stride[static_cast<std::size_t>(axis)];
            for (std::size_t idx = 0; idx < cells; ++idx) {
                long coord = static_cast<long>((idx / s) % static_cast<std::size_t>(side));
                Integer v = box[idx];
                if (coord > 0) v += box[idx - s];
                if (coord < side - 1) v += box[idx + s];
                tmp[idx] = v;
            }
            std::swap(box, tmp);
        }
        for (std::size_t idx = 0; idx < cells; ++idx) box[idx] -= cur[idx];
        std::swap(cur, box);
    }
    return cur[origin];
}

std::vector<Integer> trinomial_central(long kmax) {
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    std::vector<Integer> out{Integer(1)};
    std::vector<Integer> poly{Integer(1)};  // coefficients of (1+z+z^2)^k
    for (long k = 1; k <= kmax; ++k) {
        std::vector<Integer> next(poly.size() + 2);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i];
            next[i + 2] += poly[i];
        }
        poly = std::move(next);
        out.push_back(poly[static_cast<std::size_t>(k)]);
    }
    return out;
}

VerifyReport verify_operator(const RecOperator& op, const HoloSeq& a, const HyperTerm& h, long d,
                             long n_check) {
    VerifyReport rep;
    rep.checked_upto = n_check;
    std::vector<RatFunc> xs = brute_sum(a, h, d, n_check + op.order());
    AnnihilationReport ann = operator_annihilates(op, xs, 0, n_check);
    rep.skipped = ann.skipped;
    long n0 = operator_valid_from(op, n_check);
    bool any_real_failure = false;
    for (auto& [v, res] : ann.failures) {
        bool lead_zero = op.leading().denominator_vanishes_at(op.shift_var, Rational(v)) ||
                         op.leading().subst_rational(op.shift_var, Rational(v)).is_zero();
        if (lead_zero && v < n0) {
            rep.skipped.push_back(v);
        } else {
            rep.failures.emplace_back(v, res);
            any_real_failure = true;
        }
    }
    rep.valid_from = rep.skipped.empty() && ann.failures.empty() ? 0 : n0;
    rep.holds = !any_real_failure;
    return rep;
}

}  // namespace sumrec
