#include <sumrec/linalg.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace sumrec {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1u) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1u;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t integer_mod(const Integer& z) {
    Integer r = z % Integer(static_cast<unsigned long>(kPrime));
    if (r < 0) r += Integer(static_cast<unsigned long>(kPrime));
    return r.get_ui();
}

// Evaluates a polynomial at the given residues; returns false when a
// coefficient denominator is divisible by the prime (caller retries).
bool poly_mod(const MultiPoly& p, const std::vector<std::uint64_t>& point, std::uint64_t& out) {
    std::uint64_t acc = 0;
    for (auto& [m, c] : p.terms()) {
        std::uint64_t den = integer_mod(c.get_den());
        if (den == 0) return false;
        std::uint64_t t = mulmod(integer_mod(c.get_num()), invmod(den));
        for (auto& [v, e] : m.exps) {
            std::uint64_t base = v < static_cast<int>(point.size()) ? point[static_cast<std::size_t>(v)] : 1;
            t = mulmod(t, powmod(base, static_cast<std::uint64_t>(e)));
        }
        acc = (acc + t) % kPrime;
    }
    out = acc;
    return true;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        std::uint64_t inv = invmod(m[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            std::uint64_t f = mulmod(m[r][c], inv);
            for (std::size_t cc = c; cc < cols; ++cc) {
                std::uint64_t sub = mulmod(f, m[rank][cc]);
                m[r][cc] = (m[r][cc] + kPrime - sub) % kPrime;
            }
        }
        ++rank;
    }
    return rank;
}

int max_var_id(const RatMatrix& m) {
    int hi = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (int v : m.at(r, c).num().variables()) hi = std::max(hi, v);
            for (int v : m.at(r, c).den().variables()) hi = std::max(hi, v);
        }
    return hi;
}

// Specializing the variables can only drop the rank, so a zero modular
// nullity certifies a zero symbolic nullity.
std::size_t modular_rank_probe(const RatMatrix& m, const Deadline& deadline) {
    std::mt19937_64 rng(0x5eed0c0ffeeULL);
    int nvars = max_var_id(m) + 1;
    std::size_t best_rank = 0;
    for (int trial = 0; trial < 2; ++trial) {
        check_deadline(deadline);
        std::vector<std::uint64_t> point(static_cast<std::size_t>(nvars));
        for (auto& x : point) x = rng() % (kPrime - 7) + 3;
        std::vector<std::vector<std::uint64_t>> mm(m.rows(), std::vector<std::uint64_t>(m.cols()));
        bool ok = true;
        for (std::size_t r = 0; r < m.rows() && ok; ++r)
            for (std::size_t c = 0; c < m.cols() && ok; ++c) {
                std::uint64_t nv = 0, dv = 0;
                ok = poly_mod(m.at(r, c).num(), point, nv) && poly_mod(m.at(r, c).den(), point, dv) && dv != 0;
                if (ok) mm[r][c] = mulmod(nv, invmod(dv));
            }
        if (!ok) continue;
        best_rank = std::max(best_rank, modular_rank(mm));
    }
    return best_rank;
}

struct PolyRow {
    std::vector<MultiPoly> entries;
};

void remove_row_content(PolyRow& row) {
    MultiPoly g;
    for (auto& e : row.entries) {
        if (e.is_zero()) continue;
        g = g.is_zero() ? e : poly_gcd(g, e);
        if (g.is_constant() && is_one(g.constant_value())) break;
    }
    if (g.is_zero()) return;
    if (g.is_constant() && is_one(g.constant_value())) {
        // still strip the collective rational content
        Rational rc(0);
        Integer gn(0), gl(1);
        for (auto& e : row.entries) {
            if (e.is_zero()) continue;
            Rational c = e.rational_content();
            gn = gcd_integer(gn, c.get_num());
            gl = lcm_integer(gl, c.get_den());
        }
        Rational scale(gn, gl);
        scale.canonicalize();
        if (!is_one(scale) && !sumrec::is_zero(scale))
            for (auto& e : row.entries) e = e.scaled(Rational(1) / scale);
        return;
    }
    for (auto& e : row.entries)
        if (!e.is_zero()) e = poly_divexact(e, g);
}

}  // namespace

std::vector<RatFunc> apply_matrix(const RatMatrix& m, const std::vector<RatFunc>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("vector length does not match matrix columns");
    std::vector<RatFunc> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        RatFunc acc;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero() || v[c].is_zero()) continue;
            acc += m.at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

std::vector<std::vector<RatFunc>> nullspace(const RatMatrix& m, const Deadline& deadline) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (cols == 0) return {};

    if (rows > 0) {
        std::size_t rank_probe = modular_rank_probe(m, deadline);
        if (rank_probe >= cols) return {};
    }

    // denominator-cleared, content-free working rows
    std::vector<PolyRow> work;
    work.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        check_deadline(deadline);
        MultiPoly l(Rational(1));
        for (std::size_t c = 0; c < cols; ++c)
            if (!m.at(r, c).is_zero()) l = poly_lcm(l, m.at(r, c).den());
        PolyRow row;
        row.entries.resize(cols);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            const RatFunc& e = m.at(r, c);
            if (e.is_zero()) continue;
            row.entries[c] = e.num() * poly_divexact(l, e.den());
            nonzero = true;
        }
        if (!nonzero) continue;
        remove_row_content(row);
        work.push_back(std::move(row));
    }

    std::vector<bool> row_done(work.size(), false), col_done(cols, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col) in order

    for (;;) {
        check_deadline(deadline);
        std::size_t pr = work.size(), pc = cols;
        int best_deg = -1;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c] || work[r].entries[c].is_zero()) continue;
                int d = work[r].entries[c].total_degree();
                if (best_deg < 0 || d < best_deg || (d == best_deg && (c < pc || (c == pc && r < pr)))) {
                    best_deg = d;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best_deg < 0) break;

        const MultiPoly piv = work[pr].entries[pc];
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (row_done[r] || r == pr || work[r].entries[pc].is_zero()) continue;
            check_deadline(deadline);
            const MultiPoly f = work[r].entries[pc];
            for (std::size_t c = 0; c < cols; ++c) {
                if (col_done[c] || c == pc) continue;
                work[r].entries[c] = work[r].entries[c] * piv - work[pr].entries[c] * f;
            }
            work[r].entries[pc] = MultiPoly();
            remove_row_content(work[r]);
        }
        row_done[pr] = true;
        col_done[pc] = true;
        pivots.emplace_back(pr, pc);
    }

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!col_done[c]) free_cols.push_back(c);

    std::vector<std::vector<RatFunc>> basis;
    for (std::size_t f : free_cols) {
        check_deadline(deadline);
        std::vector<RatFunc> v(cols);
        v[f] = RatFunc(Rational(1));
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [r, c] = *it;
            RatFunc acc;
            for (std::size_t cc = 0; cc < cols; ++cc) {
                if (cc == c || work[r].entries[cc].is_zero() || v[cc].is_zero()) continue;
                acc += RatFunc(work[r].entries[cc]) * v[cc];
            }
            v[c] = -(acc / RatFunc(work[r].entries[c]));
        }
        // clear denominators and strip the collective polynomial factor
        MultiPoly l(Rational(1));
        for (auto& e : v)
            if (!e.is_zero()) l = poly_lcm(l, e.den());
        std::vector<MultiPoly> w(cols);
        MultiPoly g;
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c].is_zero()) continue;
            w[c] = v[c].num() * poly_divexact(l, v[c].den());
            g = g.is_zero() ? w[c] : poly_gcd(g, w[c]);
        }
        if (!g.is_zero() && !(g.is_constant() && is_one(g.constant_value())))
            for (auto& e : w)
                if (!e.is_zero()) e = poly_divexact(e, g);
        for (auto& e : w) {
            if (e.is_zero()) continue;
            if (sgn(e.leading_coefficient()) < 0)
                for (auto& x : w) x = -x;
            break;
        }
        std::vector<RatFunc> out(cols);
        for (std::size_t c = 0; c < cols; ++c) out[c] = RatFunc(std::move(w[c]));
        basis.push_back(std::move(out));
    }
    return basis;
}

}  // namespace sumrec
