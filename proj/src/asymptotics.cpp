#include <sumrec/asymptotics.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <stdexcept>

namespace sumrec {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

// polynomial extrapolation to u = 0 through (u_i, f_i), Neville scheme
Real neville_at_zero(const std::vector<Real>& u, std::vector<Real> f) {
    const std::size_t m = f.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = 0; i + level < m; ++i)
            f[i] = f[i + 1] + (f[i + 1] - f[i]) * u[i + level] / (u[i] - u[i + level]);
    return f[0];
}

// evaluate a polynomial coefficient at integer argument, exactly
Rational eval_poly_at(const RatFunc& c, int var, long v) {
    return c.subst_rational(var, Rational(v)).constant_value();
}

}  // namespace

std::vector<Rational> unroll_terms(const RecOperator& op_in, const std::vector<Rational>& init, long n_max) {
    RecOperator op = operator_normalize(op_in);
    const int I = op.order();
    if (static_cast<long>(init.size()) < I) throw std::invalid_argument("need at least 'order' initial terms");
    for (auto& c : op.coeffs)
        for (int v : c.num().variables())
            if (v != op.shift_var)
                throw std::invalid_argument("term generation needs numeric coefficients; parameter '" +
                                            Symbols::name(v) + "' is unbound");
    std::vector<Rational> x(init.begin(), init.end());
    x.reserve(static_cast<std::size_t>(n_max + 1));
    while (static_cast<long>(x.size()) <= n_max) {
        long t = static_cast<long>(x.size());
        long base = t - I;
        Rational lead = eval_poly_at(op.leading(), op.shift_var, base);
        if (sumrec::is_zero(lead))
            throw std::domain_error("leading coefficient vanishes at index " + std::to_string(base) +
                                    "; supply more initial terms");
        Rational acc(0);
        for (int i = 0; i < I; ++i) {
            const RatFunc& c = op.coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            acc += eval_poly_at(c, op.shift_var, base) * x[static_cast<std::size_t>(base + i)];
        }
        x.push_back(-acc / lead);
    }
    return x;
}

AsymptoticFit estimate_growth(const RecOperator& op, const std::vector<Rational>& init, long n_max,
                              int richardson_depth) {
    AsymptoticFit fit;
    if (n_max < 64) {
        fit.message = "need n_max >= 64";
        return fit;
    }
    richardson_depth = std::clamp(richardson_depth, 1, 8);
    std::vector<Rational> terms = unroll_terms(op, init, n_max);

    // sample nodes n_max / 2^j
    std::vector<long> nodes;
    for (int j = 0; j <= richardson_depth; ++j) {
        long nj = n_max / (1L << j);
        if (nj < 8 || nj + 1 > n_max) break;
        nodes.push_back(nj);
    }
    if (nodes.size() < 3) {
        fit.message = "not enough usable sample nodes";
        return fit;
    }
    for (long nj : nodes) {
        if (sumrec::is_zero(terms[static_cast<std::size_t>(nj)]) ||
            sumrec::is_zero(terms[static_cast<std::size_t>(nj + 1)])) {
            fit.message = "zero terms in the tail prevent ratio estimation";
            return fit;
        }
        if (sgn(terms[static_cast<std::size_t>(nj)]) != sgn(terms[static_cast<std::size_t>(nj + 1)])) {
            fit.message = "sign-alternating tail prevents ratio estimation";
            return fit;
        }
    }

    std::vector<Real> u, ratio;
    for (long nj : nodes) {
        u.push_back(Real(1) / Real(nj));
        ratio.push_back(to_real(terms[static_cast<std::size_t>(nj + 1)]) / to_real(terms[static_cast<std::size_t>(nj)]));
    }
    Real r_hat = neville_at_zero(u, ratio);
    if (r_hat <= 0) {
        fit.message = "non-positive growth estimate";
        return fit;
    }

    std::vector<Real> theta_samples;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        Real rho = ratio[t] / r_hat - Real(1);
        theta_samples.push_back(Real(nodes[t]) * rho);
    }
    Real theta_hat = neville_at_zero(u, theta_samples);

    // log-domain least squares for c and the corrections:
    // log x_n - n log r - theta log n  ~  log c + b1/n + (b2 - b1^2/2)/n^2 + ...
    const Real log_r = log(r_hat);
    long lo = std::max<long>(50, n_max / 10), hi = n_max;
    long stride = std::max<long>(1, (hi - lo) / 1500);
    constexpr int kBasis = 5;
    std::vector<std::vector<Real>> ata(kBasis, std::vector<Real>(kBasis, Real(0)));
    std::vector<Real> atb(kBasis, Real(0));
    std::size_t used = 0;
    for (long v = lo; v <= hi; v += stride) {
        const Rational& xv = terms[static_cast<std::size_t>(v)];
        if (sumrec::is_zero(xv) || sgn(xv) < 0) continue;
        Real y = log(to_real(xv)) - Real(v) * log_r - theta_hat * log(Real(v));
        Real b1 = Real(1), invn = Real(1) / Real(v);
        std::vector<Real> row(kBasis);
        row[0] = b1;
        for (int s = 1; s < kBasis; ++s) row[static_cast<std::size_t>(s)] = row[static_cast<std::size_t>(s - 1)] * invn;
        for (int a = 0; a < kBasis; ++a) {
            for (int b = 0; b < kBasis; ++b)
                ata[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                    row[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(b)];
            atb[static_cast<std::size_t>(a)] += row[static_cast<std::size_t>(a)] * y;
        }
        ++used;
    }
    if (used < 16) {
        fit.message = "too few usable points in the fit window";
        return fit;
    }
    // solve the 5x5 normal equations by Gaussian elimination
    std::vector<Real> beta(kBasis, Real(0));
    {
        auto m = ata;
        auto rhs = atb;
        for (int c = 0; c < kBasis; ++c) {
            int piv = c;
            for (int rr = c + 1; rr < kBasis; ++rr)
                if (abs(m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)]) >
                    abs(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)]))
                    piv = rr;
            std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(piv)]);
            std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(piv)]);
            for (int rr = c + 1; rr < kBasis; ++rr) {
                Real f = m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] /
                         m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
                for (int cc = c; cc < kBasis; ++cc)
                    m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] -=
                        f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)];
                rhs[static_cast<std::size_t>(rr)] -= f * rhs[static_cast<std::size_t>(c)];
            }
        }
        for (int rr = kBasis - 1; rr >= 0; --rr) {
            Real acc = rhs[static_cast<std::size_t>(rr)];
            for (int cc = rr + 1; cc < kBasis; ++cc)
                acc -= m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] * beta[static_cast<std::size_t>(cc)];
            beta[static_cast<std::size_t>(rr)] = acc / m[static_cast<std::size_t>(rr)][static_cast<std::size_t>(rr)];
        }
    }

    // rms residual of the fit
    Real ss(0);
    std::size_t cnt = 0;
    for (long v = lo; v <= hi; v += stride) {
        const Rational& xv = terms[static_cast<std::size_t>(v)];
        if (sumrec::is_zero(xv) || sgn(xv) < 0) continue;
        Real y = log(to_real(xv)) - Real(v) * log_r - theta_hat * log(Real(v));
        Real pred(0), invn = Real(1) / Real(v), p(1);
        for (int s = 0; s < kBasis; ++s) {
            pred += beta[static_cast<std::size_t>(s)] * p;
            p *= invn;
        }
        ss += (y - pred) * (y - pred);
        ++cnt;
    }

    Real c_hat = exp(beta[0]);
    Real b1 = beta[1];
    Real b2 = beta[2] + beta[1] * beta[1] / 2;  // ratio-domain correction from the log fit

    fit.conclusive = true;
    fit.growth = static_cast<double>(r_hat);
    fit.theta = static_cast<double>(theta_hat);
    fit.constant = static_cast<double>(c_hat);
    fit.corrections = {static_cast<double>(b1), static_cast<double>(b2)};
    fit.n_lo = lo;
    fit.n_hi = hi;
    fit.residual = static_cast<double>(sqrt(ss / Real(static_cast<long>(cnt))));
    fit.message = "ok";
    return fit;
}

}  // namespace sumrec
