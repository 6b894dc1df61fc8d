#include <sumrec/celine.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace sumrec {

namespace {

// exponent vectors alpha >= 0 over D slots with |alpha| = d, lexicographic
std::vector<std::vector<int>> compositions(int D, long d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(D), 0);
    // iterate by distributing d among D slots
    auto rec = [&](auto&& self, int slot, long rem) -> void {
        if (slot == D - 1) {
            cur[static_cast<std::size_t>(slot)] = static_cast<int>(rem);
            out.push_back(cur);
            return;
        }
        for (long v = rem; v >= 0; --v) {
            cur[static_cast<std::size_t>(slot)] = static_cast<int>(v);
            self(self, slot + 1, rem - v);
        }
    };
    if (D == 0) {
        out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

Rational multinomial(long d, const std::vector<int>& alpha) {
    Integer num = factorial_integer(d);
    for (int a : alpha) num /= factorial_integer(a);
    return Rational(num);
}

double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

AnsatzSystem build_system(const HyperTerm& h, const RecOperator& seq_rec, long d, int I, int J,
                          const Deadline& deadline, std::size_t row_cap) {
    if (I < 1) throw std::invalid_argument("order bound must be >= 1");
    if (J < 0) throw std::invalid_argument("shift window must be >= 0");
    if (d < 0) throw std::invalid_argument("sequence power must be >= 0");
    const int D = seq_rec.order();

    auto c = shift_reduce(seq_rec, J);
    AnsatzSystem sys;
    sys.a_monomials = compositions(D, d);
    std::map<std::vector<int>, int> alpha_index;
    for (std::size_t t = 0; t < sys.a_monomials.size(); ++t)
        alpha_index[sys.a_monomials[t]] = static_cast<int>(t);

    for (int i = 0; i <= I; ++i)
        for (int j = 0; j <= J; ++j) sys.unknowns.emplace_back(i, j);

    // per unknown and a-monomial: the rational function multiplying
    // y_{i,j} * a^alpha before clearing
    struct Piece {
        std::size_t col;
        int alpha;
        RatFunc value;
    };
    std::vector<Piece> pieces;
    pieces.reserve(sys.unknowns.size() * sys.a_monomials.size());

    // kappa_{j,alpha}(k): multinomial expansion of (sum_m c[j][m] a_m)^d
    std::vector<std::vector<RatFunc>> kappa(static_cast<std::size_t>(J + 1),
                                            std::vector<RatFunc>(sys.a_monomials.size()));
    for (int j = 0; j <= J; ++j) {
        check_deadline(deadline);
        for (std::size_t t = 0; t < sys.a_monomials.size(); ++t) {
            const auto& alpha = sys.a_monomials[t];
            RatFunc prod(multinomial(d, alpha));
            bool zero = false;
            for (int m = 0; m < D && !zero; ++m) {
                int e = alpha[static_cast<std::size_t>(m)];
                if (e == 0) continue;
                const RatFunc& base = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
                if (base.is_zero()) {
                    zero = true;
                    break;
                }
                prod *= base.pow(e);
            }
            kappa[static_cast<std::size_t>(j)][t] = zero ? RatFunc() : prod;
        }
    }

    MultiPoly common_den(Rational(1));
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
        check_deadline(deadline);
        auto [i, j] = sys.unknowns[u];
        RatFunc g = h.shift_ratio(i, j);
        for (std::size_t t = 0; t < sys.a_monomials.size(); ++t) {
            const RatFunc& kap = kappa[static_cast<std::size_t>(j)][t];
            if (kap.is_zero()) continue;
            RatFunc val = g * kap;
            if (val.is_zero()) continue;
            common_den = poly_lcm(common_den, val.den());
            pieces.push_back({u, static_cast<int>(t), std::move(val)});
        }
    }

    // collect coefficients of k-power x a-monomial; entries are polynomials
    // in n and the parameters
    std::map<std::pair<int, int>, std::map<std::size_t, MultiPoly>> rows;
    for (auto& piece : pieces) {
        check_deadline(deadline);
        MultiPoly cleared = piece.value.num() * poly_divexact(common_den, piece.value.den());
        for (auto& [mono, coef] : cleared.terms()) {
            int kpow = mono.exponent(kVarK);
            Monomial rest = mono.without(kVarK);
            auto& entry = rows[{kpow, piece.alpha}][piece.col];
            entry.add_term(rest, coef);
        }
        if (rows.size() > row_cap)
            throw std::runtime_error("ansatz too large: " + std::to_string(rows.size()) + " collected monomials at I=" +
                                     std::to_string(I) + ", J=" + std::to_string(J));
    }

    sys.matrix = RatMatrix(rows.size(), sys.unknowns.size());
    std::size_t r = 0;
    for (auto& [key, entries] : rows) {
        sys.row_keys.push_back(key);
        for (auto& [col, poly] : entries) sys.matrix.at(r, col) = RatFunc(poly);
        ++r;
    }
    return sys;
}

namespace {

struct Candidate {
    RecOperator op;
    int order;
    int degree;
    std::size_t index;
    std::vector<RatFunc> certificate;
};

int total_coeff_degree(const RecOperator& op) {
    int d = 0;
    for (auto& coeff : op.coeffs)
        if (!coeff.is_zero()) d += std::max(0, coeff.num().total_degree());
    return d;
}

}  // namespace

RecOperator extract_recurrence(const std::vector<RatFunc>& certificate,
                               const std::vector<std::pair<int, int>>& unknowns, int I) {
    std::vector<RatFunc> coeffs(static_cast<std::size_t>(I + 1));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (certificate[u].is_zero()) continue;
        coeffs[static_cast<std::size_t>(unknowns[u].first)] += certificate[u];
    }
    RecOperator raw;
    raw.shift_var = kVarN;
    raw.coeffs = std::move(coeffs);
    if (raw.is_zero())
        throw std::domain_error("degenerate certificate: all operator coefficients vanish");
    return operator_normalize(raw);
}

std::optional<std::vector<RatFunc>> solve_ansatz(const AnsatzSystem& sys, const Deadline& deadline) {
    auto basis = nullspace(sys.matrix, deadline);
    if (basis.empty()) return std::nullopt;

    std::optional<Candidate> best;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        int I = 0;
        for (auto& [i, j] : sys.unknowns) I = std::max(I, i);
        try {
            RecOperator op = extract_recurrence(basis[b], sys.unknowns, I);
            Candidate cand{op, op.order(), total_coeff_degree(op), b, basis[b]};
            if (!best || std::tie(cand.order, cand.degree, cand.index) <
                             std::tie(best->order, best->degree, best->index))
                best = std::move(cand);
        } catch (const std::domain_error&) {
            continue;  // degenerate member, try the next basis vector
        }
    }
    if (!best) return std::nullopt;

    // certificate identity: the collected expression really is the zero
    // polynomial, equivalently M * y = 0 exactly
    auto residual = apply_matrix(sys.matrix, best->certificate);
    for (auto& e : residual)
        if (!e.is_zero()) throw std::logic_error("certificate fails the exact system check");
    return best->certificate;
}

CelineResult findrec(const CelineProblem& problem) {
    if (problem.d < 0) throw std::invalid_argument("sequence power must be >= 0");
    if (problem.I_max < 1) throw std::invalid_argument("I_max must be >= 1");
    if (!problem.term.path_independent())
        throw std::invalid_argument("term fails the shift-compatibility identity; not doubly hypergeometric");

    const int D = problem.seq.order();
    std::vector<AttemptDiag> attempts;
    bool saw_timeout = false;

    for (int I = std::max(1, problem.I_min); I <= problem.I_max; ++I) {
        int j_cap = problem.J_max ? *problem.J_max : I + D + static_cast<int>(problem.d);
        for (int J = 0; J <= j_cap; ++J) {
            AttemptDiag diag;
            diag.I = I;
            diag.J = J;
            auto t0 = std::chrono::steady_clock::now();
            Deadline deadline = std::chrono::steady_clock::now() +
                                std::chrono::microseconds(static_cast<long>(problem.timeout_seconds * 1e6));
            try {
                AnsatzSystem sys = build_system(problem.term, problem.seq.rec(), problem.d, I, J, deadline,
                                                problem.row_cap);
                diag.rows = sys.matrix.rows();
                diag.cols = sys.matrix.cols();
                auto cert = solve_ansatz(sys, deadline);
                if (!cert) {
                    diag.outcome = "no-solution";
                    diag.seconds = elapsed_seconds(t0);
                    attempts.push_back(diag);
                    continue;
                }
                RecOperator op;
                try {
                    op = extract_recurrence(*cert, sys.unknowns, I);
                } catch (const std::domain_error&) {
                    diag.outcome = "degenerate";
                    diag.seconds = elapsed_seconds(t0);
                    attempts.push_back(diag);
                    continue;
                }
                long n_check = std::max<long>(20, 2L * op.order() + 5);
                VerifyReport rep = verify_operator(op, problem.seq, problem.term, problem.d, n_check);
                diag.seconds = elapsed_seconds(t0);
                if (!rep.holds) {
                    diag.outcome = "verify-failed";
                    attempts.push_back(diag);
                    continue;
                }
                diag.outcome = "solved";
                attempts.push_back(diag);
                CelineResult res;
                res.op = op;
                res.I_used = I;
                res.J_used = J;
                res.certificate = *cert;
                res.unknown_labels = sys.unknowns;
                res.verification = rep;
                res.attempts = attempts;
                return res;
            } catch (const TimeoutError&) {
                diag.outcome = "timeout";
                diag.seconds = elapsed_seconds(t0);
                attempts.push_back(diag);
                saw_timeout = true;
                continue;
            } catch (const std::runtime_error& e) {
                diag.outcome = std::string("too-large: ") + e.what();
                diag.seconds = elapsed_seconds(t0);
                attempts.push_back(diag);
                continue;
            }
        }
    }
    throw NotFoundError("no recurrence found within I <= " + std::to_string(problem.I_max), attempts,
                        saw_timeout);
}

}  // namespace sumrec
