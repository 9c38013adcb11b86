#include "admissible/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace admissible {

BivariatePolynomial::BivariatePolynomial(const CyclotomicNumber& c) {
    if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

BivariatePolynomial BivariatePolynomial::monomial(const CyclotomicNumber& c, int f_exp, int t_exp) {
    if (f_exp < 0 || t_exp < 0) throw ArithmeticError("negative exponent in polynomial");
    BivariatePolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Exponent{f_exp, t_exp}, c);
    return p;
}

bool BivariatePolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

CyclotomicNumber BivariatePolynomial::coefficient(int f_exp, int t_exp) const {
    auto it = terms_.find(Exponent{f_exp, t_exp});
    return it == terms_.end() ? CyclotomicNumber() : it->second;
}

int BivariatePolynomial::degree_f() const { return terms_.empty() ? -1 : terms_.rbegin()->first.f; }

int BivariatePolynomial::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

Exponent BivariatePolynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) m.t = std::min(m.t, e.t);
    return m;
}

unsigned BivariatePolynomial::coefficient_order() const {
    unsigned m = 1;
    for (const auto& [e, c] : terms_) m = lcm_order(m, c.order());
    return m;
}

void BivariatePolynomial::add_term(const Exponent& e, const CyclotomicNumber& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.size() == 1 || b.size() == 1) {
        const auto& [em, cm] = a.size() == 1 ? *a.terms_.begin() : *b.terms_.begin();
        const BivariatePolynomial& other = a.size() == 1 ? b : a;
        for (const auto& [e, c] : other.terms_) {
            CyclotomicNumber x = c * cm;
            if (!x.is_zero()) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.f + em.f, e.t + em.t}, std::move(x));
        }
        return out;
    }

    // Promote everything to one field, then accumulate unreduced products
    // per output monomial and reduce each coefficient once.
    const unsigned m = lcm_order(a.coefficient_order(), b.coefficient_order());
    const auto field = cyclotomic_field(m);
    auto flatten = [m](const BivariatePolynomial& p) {
        std::vector<std::pair<Exponent, CyclotomicNumber>> v;
        v.reserve(p.size());
        for (const auto& [e, c] : p.terms_) v.emplace_back(e, c.order() == m ? c : c.promoted(m));
        return v;
    };
    const auto va = flatten(a), vb = flatten(b);
    auto t_range = [](const std::vector<std::pair<Exponent, CyclotomicNumber>>& v) {
        int lo = v.front().first.t, hi = lo;
        for (const auto& [e, c] : v) lo = std::min(lo, e.t), hi = std::max(hi, e.t);
        return std::pair{lo, hi};
    };
    const auto [ta_lo, ta_hi] = t_range(va);
    const auto [tb_lo, tb_hi] = t_range(vb);
    const int f_lo = va.front().first.f + vb.front().first.f;
    const int t_lo = ta_lo + tb_lo;
    const std::size_t f_span = static_cast<std::size_t>(va.back().first.f + vb.back().first.f - f_lo + 1);
    const std::size_t t_span = static_cast<std::size_t>(ta_hi + tb_hi - t_lo + 1);

    if (f_span * t_span <= 4 * va.size() * vb.size() + 1024) {
        std::vector<ProductAccumulator> grid(f_span * t_span, ProductAccumulator(field));
        for (const auto& [ea, ca] : va)
            for (const auto& [eb, cb] : vb) {
                const std::size_t idx = static_cast<std::size_t>(ea.f + eb.f - f_lo) * t_span +
                                        static_cast<std::size_t>(ea.t + eb.t - t_lo);
                grid[idx].add_product(ca, cb);
            }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (grid[i].empty()) continue;
            CyclotomicNumber x = grid[i].value();
            if (x.is_zero()) continue;
            const Exponent e{f_lo + static_cast<int>(i / t_span), t_lo + static_cast<int>(i % t_span)};
            out.terms_.emplace_hint(out.terms_.end(), e, std::move(x));
        }
        return out;
    }

    std::map<Exponent, ProductAccumulator> sums;
    for (const auto& [ea, ca] : va)
        for (const auto& [eb, cb] : vb)
            sums.try_emplace(Exponent{ea.f + eb.f, ea.t + eb.t}, field).first->second.add_product(ca, cb);
    for (const auto& [e, acc] : sums) {
        CyclotomicNumber x = acc.value();
        if (!x.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(x));
    }
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) { return *this = *this * rhs; }

BivariatePolynomial& BivariatePolynomial::operator*=(const CyclotomicNumber& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned exponent) const {
    BivariatePolynomial result(1);
    BivariatePolynomial base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::shifted_down(Exponent s) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        if (e.f < s.f || e.t < s.t) throw ArithmeticError("monomial shift leaves polynomial ring");
        out.terms_.emplace_hint(out.terms_.end(), Exponent{e.f - s.f, e.t - s.t}, c);
    }
    return out;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (!(e == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string BivariatePolynomial::to_string(const std::string& zeta_symbol) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, const CyclotomicNumber*>> ordered;
    for (const auto& [e, c] : terms_) ordered.emplace_back(e, &c);
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        if (x.first.f != y.first.f) return x.first.f > y.first.f;
        return x.first.t < y.first.t;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, cp] : ordered) {
        const CyclotomicNumber& c = *cp;
        const bool monic_part = e.f == 0 && e.t == 0;
        std::string coeff;
        bool negative = false;
        if (c.is_rational()) {
            negative = c.rational_part() < 0;
            Rational mag = abs(c.rational_part());
            if (mag != 1 || monic_part) coeff = mag.get_str();
        } else {
            coeff = "(" + c.to_string(zeta_symbol) + ")";
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (!coeff.empty()) {
            os << coeff;
            need_star = true;
        }
        auto var = [&](const char* name, int k) {
            if (k == 0) return;
            if (need_star) os << '*';
            os << name;
            if (k > 1) os << '^' << k;
            need_star = true;
        };
        var("f", e.f);
        var("t", e.t);
    }
    return os.str();
}

namespace {

// Exact division through the Kronecker map f^i t^j -> X^(i*T + j) with
// T = deg_t(p) + 1.  If d divides p the quotient has t-degree
// deg_t(p) - deg_t(d), so any quotient coefficient beyond that bound, or a
// nonzero low-order remainder, proves d does not divide p.
std::optional<BivariatePolynomial> kronecker_divide(const BivariatePolynomial& p, const BivariatePolynomial& d) {
    const unsigned m = lcm_order(p.coefficient_order(), d.coefficient_order());
    const auto field = cyclotomic_field(m);
    const auto lift = [m](const CyclotomicNumber& c) { return c.order() == m ? c : c.promoted(m); };
    const std::size_t T = static_cast<std::size_t>(p.degree_t()) + 1;
    const std::size_t t_limit = T - 1 - static_cast<std::size_t>(d.degree_t());
    const auto index = [T](const Exponent& e) { return static_cast<std::size_t>(e.f) * T + static_cast<std::size_t>(e.t); };

    const std::size_t n = index(p.leading_term().first) + 1;
    std::vector<CyclotomicNumber> dense_p(n);
    std::vector<bool> has_p(n, false);
    for (const auto& [e, c] : p.terms()) {
        dense_p[index(e)] = lift(c);
        has_p[index(e)] = true;
    }
    std::vector<std::pair<std::size_t, CyclotomicNumber>> dense_d;  // below the leading term
    for (const auto& [e, c] : d.terms()) dense_d.emplace_back(index(e), lift(c));
    const std::size_t dl = dense_d.back().first;
    const CyclotomicNumber lead_inv = dense_d.back().second.inverse();
    dense_d.pop_back();

    const std::size_t qn = n - dl;
    std::vector<CyclotomicNumber> q(qn);
    std::vector<bool> has_q(qn, false);
    // r_k = p_k - sum_{i + j = k} q_i d_j over the quotient terms found so far.
    const auto residual = [&](std::size_t k) {
        ProductAccumulator acc(field);
        for (const auto& [j, dc] : dense_d) {
            if (j > k) break;
            const std::size_t i = k - j;
            if (i < qn && has_q[i]) acc.add_product(q[i], dc);
        }
        CyclotomicNumber r = has_p[k] ? dense_p[k] : CyclotomicNumber(Rational(0), m);
        if (!acc.empty()) r -= acc.value();
        return r;
    };
    for (std::size_t k = n; k-- > dl;) {
        CyclotomicNumber r = residual(k);
        if (r.is_zero()) continue;
        const std::size_t i = k - dl;
        if (i % T > t_limit) return std::nullopt;
        q[i] = r * lead_inv;
        has_q[i] = true;
    }
    for (std::size_t k = 0; k < dl; ++k)
        if (!residual(k).is_zero()) return std::nullopt;

    BivariatePolynomial out;
    for (std::size_t i = 0; i < qn; ++i)
        if (has_q[i]) out += BivariatePolynomial::monomial(q[i], static_cast<int>(i / T), static_cast<int>(i % T));
    return out;
}

}  // namespace

std::optional<BivariatePolynomial> poly_exact_divide(const BivariatePolynomial& p, const BivariatePolynomial& d) {
    if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
    if (p.is_zero()) return BivariatePolynomial();
    const auto& [lead_e, lead_c] = d.leading_term();
    if (d.size() == 1) {
        const CyclotomicNumber inv = lead_c.inverse();
        BivariatePolynomial q;
        for (const auto& [e, c] : p.terms()) {
            if (e.f < lead_e.f || e.t < lead_e.t) return std::nullopt;
            q += BivariatePolynomial::monomial(c * inv, e.f - lead_e.f, e.t - lead_e.t);
        }
        return q;
    }
    // Cheap necessary conditions: lex-extreme terms and degrees are additive.
    const Exponent pl = p.leading_term().first, pm = p.lex_min_exponent(), dm = d.lex_min_exponent();
    if (pl.f < lead_e.f || pl.t < lead_e.t || pm.f < dm.f || pm.t < dm.t) return std::nullopt;
    if (p.degree_t() < d.degree_t() || p.degree_f() < d.degree_f()) return std::nullopt;

    bool nonnegative = true;
    for (const auto* poly : {&p, &d})
        for (const auto& [e, c] : poly->terms()) nonnegative = nonnegative && e.f >= 0 && e.t >= 0;
    if (nonnegative) return kronecker_divide(p, d);

    const CyclotomicNumber lead_inv = lead_c.inverse();
    BivariatePolynomial rem = p;
    BivariatePolynomial quot;
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        // In lex order the leading term of d must divide the leading term of
        // the remainder; otherwise the remainder's leading term is final and
        // nonzero, so d does not divide p.
        if (re.f < lead_e.f || re.t < lead_e.t) return std::nullopt;
        auto step = BivariatePolynomial::monomial(rc * lead_inv, re.f - lead_e.f, re.t - lead_e.t);
        rem -= step * d;
        quot += step;
    }
    return quot;
}

}  // namespace admissible
