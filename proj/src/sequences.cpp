#include <sumrec/sequences.hpp>

#include <stdexcept>

namespace sumrec {

HoloSeq::HoloSeq(RecOperator rec_in_k, std::vector<RatFunc> initial, std::string name)
    : rec_(operator_normalize(rec_in_k)), initial_(std::move(initial)), name_(std::move(name)) {
    if (rec_.order() < 1) throw std::invalid_argument("sequence recurrence must have order >= 1");
    if (static_cast<int>(initial_.size()) < rec_.order())
        throw std::invalid_argument("need at least 'order' initial values");
}

HoloSeq::HoloSeq(const HoloSeq& o) : rec_(o.rec_), initial_(o.initial_), name_(o.name_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    memo_ = o.memo_;
}

HoloSeq& HoloSeq::operator=(const HoloSeq& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mu_, o.mu_);
    rec_ = o.rec_;
    initial_ = o.initial_;
    name_ = o.name_;
    memo_ = o.memo_;
    return *this;
}

std::vector<RatFunc> HoloSeq::eval(long upto) const {
    if (upto < 0) throw std::invalid_argument("negative index");
    std::lock_guard<std::mutex> lock(mu_);
    if (memo_.empty()) memo_ = initial_;
    const int D = rec_.order();
    while (static_cast<long>(memo_.size()) <= upto) {
        long t = static_cast<long>(memo_.size());
        long base = t - D;
        RatFunc lead = rec_.leading().subst_rational(rec_.shift_var, Rational(base));
        if (lead.is_zero())
            throw std::domain_error("singular recurrence for '" + name_ + "': leading coefficient vanishes at index " +
                                    std::to_string(base));
        RatFunc acc;
        for (int i = 0; i < D; ++i) {
            const RatFunc& c = rec_.coeffs[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            acc += c.subst_rational(rec_.shift_var, Rational(base)) * memo_[static_cast<std::size_t>(base + i)];
        }
        memo_.push_back(-(acc / lead));
    }
    return std::vector<RatFunc>(memo_.begin(), memo_.begin() + upto + 1);
}

HoloSeq HoloSeq::subst_param(int var, const Rational& value) const {
    RecOperator r = rec_.subst_param(var, value);
    std::vector<RatFunc> init;
    init.reserve(initial_.size());
    for (auto& v : initial_) init.push_back(v.subst_rational(var, value));
    return HoloSeq(std::move(r), std::move(init), name_ + "@" + Symbols::name(var) + "=" + value.get_str());
}

std::vector<std::vector<RatFunc>> shift_reduce(const RecOperator& rec, int J) {
    const int D = rec.order();
    if (D < 1) throw std::invalid_argument("shift reduction needs order >= 1");
    if (rec.leading().is_zero()) throw std::invalid_argument("leading coefficient is identically zero");
    std::vector<std::vector<RatFunc>> c(static_cast<std::size_t>(J + 1),
                                        std::vector<RatFunc>(static_cast<std::size_t>(D)));
    for (int j = 0; j <= J && j < D; ++j) c[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = RatFunc(Rational(1));
    if (J < D) return c;

    // a_{k+D} = sum_m gamma_m(k) a_{k+m}
    std::vector<RatFunc> gamma(static_cast<std::size_t>(D));
    for (int m = 0; m < D; ++m)
        gamma[static_cast<std::size_t>(m)] = -(rec.coeffs[static_cast<std::size_t>(m)] / rec.leading());

    for (int j = D; j <= J; ++j) {
        for (int m = 0; m < D; ++m) {
            RatFunc g = gamma[static_cast<std::size_t>(m)].shifted(rec.shift_var, j - D);
            if (g.is_zero()) continue;
            auto& src = c[static_cast<std::size_t>(j - D + m)];
            auto& dst = c[static_cast<std::size_t>(j)];
            for (int mm = 0; mm < D; ++mm) {
                if (src[static_cast<std::size_t>(mm)].is_zero()) continue;
                dst[static_cast<std::size_t>(mm)] += g * src[static_cast<std::size_t>(mm)];
            }
        }
    }
    return c;
}

HoloSeq fibonacci_seq() {
    RecOperator rec = parse_operator("N^2-N-1", "k");
    return HoloSeq(rec, {RatFunc(0L), RatFunc(1L)}, "fibonacci");
}

HoloSeq constant_one_seq() {
    RecOperator rec = parse_operator("N-1", "k");
    return HoloSeq(rec, {RatFunc(1L)}, "one");
}

HoloSeq central_trinomial_seq() {
    RecOperator rec = parse_operator("(k+2)*N^2-(2*k+3)*N-(3*k+3)", "k");
    return HoloSeq(rec, {RatFunc(1L), RatFunc(1L)}, "central-trinomial");
}

HoloSeq m_fibonacci_seq(const std::string& param) {
    int m = Symbols::intern(param);
    RecOperator rec;
    rec.shift_var = Symbols::intern("k");
    rec.coeffs = {RatFunc(-1L), -RatFunc::variable(m), RatFunc(1L)};
    return HoloSeq(rec, {RatFunc(0L), RatFunc(1L)}, param + "-fibonacci");
}

}  // namespace sumrec
