#include <sumrec/multipoly.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sumrec {

namespace {

struct SymbolTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::mutex mu;
    SymbolTable() {
        names = {"n", "k"};
        ids = {{"n", 0}, {"k", 1}};
    }
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

int Symbols::intern(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& Symbols::name(int id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(static_cast<std::size_t>(id));
}

int Symbols::lookup(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    return it == t.ids.end() ? -1 : it->second;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
}

int Monomial::exponent(int var) const {
    for (auto& [v, e] : exps)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps.reserve(exps.size() + o.exps.size());
    std::size_t i = 0, j = 0;
    while (i < exps.size() || j < o.exps.size()) {
        if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first)) {
            r.exps.push_back(exps[i++]);
        } else if (i == exps.size() || o.exps[j].first < exps[i].first) {
            r.exps.push_back(o.exps[j++]);
        } else {
            int e = exps[i].second + o.exps[j].second;
            if (e != 0) r.exps.emplace_back(exps[i].first, e);
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [v, e] : exps)
        if (o.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0;
    for (auto& [v, e] : o.exps) {
        int sub = 0;
        while (i < exps.size() && exps[i].first < v) ++i;
        if (i < exps.size() && exps[i].first == v) sub = exps[i].second;
        int ne = e - sub;
        if (ne < 0) throw std::domain_error("monomial division not exact");
        if (ne > 0) r.exps.emplace_back(v, ne);
    }
    return r;
}

Monomial Monomial::without(int var) const {
    Monomial r;
    for (auto& [v, e] : exps)
        if (v != var) r.exps.emplace_back(v, e);
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        if (a.exps[i].first != b.exps[j].first) {
            // the one holding the lower-id variable has more weight there
            return a.exps[i].first < b.exps[j].first ? 1 : -1;
        }
        if (a.exps[i].second != b.exps[j].second) return a.exps[i].second < b.exps[j].second ? -1 : 1;
        ++i, ++j;
    }
    if (i < a.exps.size()) return 1;
    if (j < b.exps.size()) return -1;
    return 0;
}

std::string Monomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : exps) {
        if (!first) os << "*";
        os << Symbols::name(v);
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

MultiPoly MultiPoly::variable(int var, int exp) {
    MultiPoly p;
    p.terms_[Monomial(var, exp)] = Rational(1);
    return p;
}

MultiPoly MultiPoly::var_plus(int var, long c) {
    MultiPoly p = variable(var);
    if (c != 0) p.terms_[Monomial()] = Rational(c);
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1 || !terms_.begin()->first.is_one())
        throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

int MultiPoly::degree(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

bool MultiPoly::contains_var(int var) const {
    for (auto& [m, c] : terms_)
        if (m.exponent(var) > 0) return true;
    return false;
}

std::vector<int> MultiPoly::variables() const {
    std::vector<int> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps)
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (sumrec::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sumrec::is_zero(it->second)) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

namespace {

// Single-variable detection for the dense fast path used by elimination,
// where operands are large polynomials in n alone.
bool univariate_in(const MultiPoly& p, int& var) {
    var = -1;
    for (auto& [m, c] : p.terms()) {
        if (m.exps.size() > 1) return false;
        if (m.exps.size() == 1) {
            if (var == -1)
                var = m.exps[0].first;
            else if (var != m.exps[0].first)
                return false;
        }
    }
    return true;
}

MultiPoly mul_dense_univariate(const MultiPoly& a, const MultiPoly& b, int var) {
    int da = a.degree(var), db = b.degree(var);
    std::vector<Rational> ca(static_cast<std::size_t>(da + 1)), cb(static_cast<std::size_t>(db + 1)),
        cr(static_cast<std::size_t>(da + db + 1));
    for (auto& [m, c] : a.terms()) ca[static_cast<std::size_t>(m.exponent(var))] = c;
    for (auto& [m, c] : b.terms()) cb[static_cast<std::size_t>(m.exponent(var))] = c;
    Rational tmp;
    for (int i = 0; i <= da; ++i) {
        if (sumrec::is_zero(ca[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j <= db; ++j) {
            if (sumrec::is_zero(cb[static_cast<std::size_t>(j)])) continue;
            tmp = ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)];
            cr[static_cast<std::size_t>(i + j)] += tmp;
        }
    }
    MultiPoly r;
    for (int e = 0; e <= da + db; ++e)
        r.add_term(Monomial(var, e), cr[static_cast<std::size_t>(e)]);
    return r;
}

}  // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return MultiPoly();
    if (terms_.size() == 1) {
        auto& [m, c] = *terms_.begin();
        return o.times_monomial(m, c);
    }
    if (o.terms_.size() == 1) {
        auto& [m, c] = *o.terms_.begin();
        return times_monomial(m, c);
    }
    int va = -1, vb = -1;
    if (univariate_in(*this, va) && univariate_in(o, vb) && (va == vb || va == -1 || vb == -1)) {
        int var = va == -1 ? vb : va;
        if (var != -1) return mul_dense_univariate(*this, o, var);
    }
    MultiPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (sumrec::is_zero(c)) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
    MultiPoly r;
    if (sumrec::is_zero(c)) return r;
    for (auto& [mm, cc] : terms_) r.terms_.emplace(mm.times(m), cc * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    int d = std::max(0, degree(var));
    std::vector<MultiPoly> out(static_cast<std::size_t>(d + 1));
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        out[static_cast<std::size_t>(e)].add_term(m.without(var), c);
    }
    return out;
}

MultiPoly MultiPoly::assemble_in(int var, const std::vector<MultiPoly>& coeffs) {
    MultiPoly r;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        Monomial pw(var, static_cast<int>(e));
        for (auto& [m, c] : coeffs[e].terms()) r.add_term(m.times(pw), c);
    }
    return r;
}

MultiPoly MultiPoly::subst_rational(int var, const Rational& value) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) {
            r.add_term(m, c);
        } else {
            r.add_term(m.without(var), c * pow_rational(value, e));
        }
    }
    return r;
}

MultiPoly MultiPoly::subst_poly(int var, const MultiPoly& value) const {
    std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        MultiPoly rest;
        rest.add_term(m.without(var), c);
        r += rest * powers[static_cast<std::size_t>(e)];
    }
    return r;
}

Rational MultiPoly::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer g(0), l(1);
    for (auto& [m, c] : terms_) {
        g = gcd_integer(g, c.get_num());
        l = lcm_integer(l, c.get_den());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

MultiPoly MultiPoly::primitive_rational() const {
    if (terms_.empty()) return *this;
    Rational c = rational_content();
    return scaled(Rational(1) / c);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0) a = -a;
        }
        if (m.is_one()) {
            os << a.get_str();
        } else {
            if (!sumrec::is_one(a)) os << a.get_str() << "*";
            os << m.str();
        }
        first = false;
    }
    return os.str();
}

namespace {

// Pseudo-remainder of u by v in variable x; coefficients stay polynomial.
MultiPoly pseudo_remainder(MultiPoly u, const MultiPoly& v, int x) {
    int dv = v.degree(x);
    MultiPoly lead_v = v.coefficients_in(x)[static_cast<std::size_t>(dv)];
    while (!u.is_zero() && u.degree(x) >= dv) {
        int du = u.degree(x);
        MultiPoly lead_u = u.coefficients_in(x)[static_cast<std::size_t>(du)];
        MultiPoly shift = MultiPoly::variable(x, du - dv);
        u = u * lead_v - v * (lead_u * shift);
    }
    return u;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

namespace {

MultiPoly positive_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly q = p.primitive_rational();
    if (sgn(q.leading_coefficient()) < 0) q = -q;
    return q;
}

MultiPoly coeff_gcd_in_var(const MultiPoly& p, int x) {
    MultiPoly g;
    for (auto& c : p.coefficients_in(x)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : poly_gcd(g, c);
        if (g.is_constant() && is_one(g.constant_value())) break;
    }
    return g;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : positive_primitive(b).scaled(b.rational_content());
    if (b.is_zero()) return positive_primitive(a).scaled(a.rational_content());

    Rational ra = a.rational_content(), rb = b.rational_content();
    Integer gn = gcd_integer(ra.get_num(), rb.get_num());
    Integer gl = lcm_integer(ra.get_den(), rb.get_den());
    Rational rc(gn, gl);
    rc.canonicalize();

    MultiPoly pa = a.scaled(Rational(1) / ra);
    MultiPoly pb = b.scaled(Rational(1) / rb);
    if (sgn(pa.leading_coefficient()) < 0) pa = -pa;
    if (sgn(pb.leading_coefficient()) < 0) pb = -pb;

    if (pa.is_constant() || pb.is_constant()) return MultiPoly(rc);

    // main variable: lowest id present in either operand
    std::vector<int> va = pa.variables(), vb = pb.variables();
    int x = std::min(va.front(), vb.front());
    if (!pa.contains_var(x) || !pb.contains_var(x)) {
        // x occurs in only one operand: gcd divides that operand's content in x
        const MultiPoly& with = pa.contains_var(x) ? pa : pb;
        const MultiPoly& other = pa.contains_var(x) ? pb : pa;
        MultiPoly cont = coeff_gcd_in_var(with, x);
        return poly_gcd(cont, other).scaled(rc);
    }

    MultiPoly ca = coeff_gcd_in_var(pa, x);
    MultiPoly cb = coeff_gcd_in_var(pb, x);
    MultiPoly cg = poly_gcd(ca, cb);

    MultiPoly u = poly_divexact(pa, ca);
    MultiPoly v = poly_divexact(pb, cb);
    if (u.degree(x) < v.degree(x)) std::swap(u, v);
    while (!v.is_zero()) {
        MultiPoly r = pseudo_remainder(u, v, x);
        u = v;
        if (r.is_zero()) {
            v = r;
        } else {
            MultiPoly rc2 = coeff_gcd_in_var(r, x);
            v = poly_divexact(r, rc2);
            v = positive_primitive(v);
        }
    }
    MultiPoly g = positive_primitive(u);
    return (g * cg).scaled(rc);
}

MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    MultiPoly g = poly_gcd(a, b);
    return poly_divexact(a * b, g);
}

MultiPoly poly_divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
    MultiPoly rem = a, q;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        if (!lb.divides(lr)) throw std::domain_error("polynomial division not exact");
        Monomial mq = lb.divided_into(lr);
        Rational cq = rem.leading_coefficient() / cb;
        q.add_term(mq, cq);
        rem -= b.times_monomial(mq, cq);
    }
    return q;
}

std::pair<MultiPoly, MultiPoly> poly_content_primitive(const MultiPoly& p, int main_var) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    int min_exp = p.degree(main_var);
    for (auto& [m, c] : p.terms()) min_exp = std::min(min_exp, m.exponent(main_var));
    MultiPoly q = p;
    if (min_exp > 0) {
        MultiPoly r;
        for (auto& [m, c] : p.terms()) {
            Monomial mm = m;
            for (auto& [v, e] : mm.exps)
                if (v == main_var) e -= min_exp;
            std::erase_if(mm.exps, [](auto& ve) { return ve.second == 0; });
            r.add_term(mm, c);
        }
        q = r;
    }
    MultiPoly cont = coeff_gcd_in_var(q, main_var);
    MultiPoly prim = poly_divexact(q, cont);
    if (min_exp > 0) cont = cont * MultiPoly::variable(main_var, min_exp);
    return {cont, prim};
}

}  // namespace sumrec
