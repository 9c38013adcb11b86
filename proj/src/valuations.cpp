#include "admissible/valuations.hpp"

#include "admissible/expression.hpp"

#include <algorithm>
#include <numeric>

namespace admissible {

PrimeSpec PrimeSpec::t() { return PrimeSpec(PrimeTag::VarT, BivariatePolynomial::t()); }
PrimeSpec PrimeSpec::f() { return PrimeSpec(PrimeTag::VarF, BivariatePolynomial::f()); }

PrimeSpec PrimeSpec::polynomial(BivariatePolynomial p) {
    if (p == BivariatePolynomial::t()) return t();
    if (p == BivariatePolynomial::f()) return f();
    if (p.is_constant()) throw std::invalid_argument("prime must be nonconstant");
    const int deg = p.degree_f();
    if (deg < 1) throw std::invalid_argument("prime must be monic in f: " + p.to_string());
    for (const auto& [e, c] : p.terms())
        if (e.f == deg && (e.t != 0 || !c.is_one()))
            throw std::invalid_argument("prime must be monic in f: " + p.to_string());
    return PrimeSpec(PrimeTag::Poly, std::move(p));
}

PrimeSpec PrimeSpec::parse(const std::string& text, unsigned zeta_order) {
    return polynomial(parse_polynomial(text, zeta_order));
}

std::string PrimeSpec::to_string() const { return poly_.to_string(); }

std::vector<PrimeSpec> standard_primes() {
    const auto f = BivariatePolynomial::f(), t = BivariatePolynomial::t();
    return {PrimeSpec::t(), PrimeSpec::f(), PrimeSpec::polynomial(f - t), PrimeSpec::polynomial(f - t * t),
            PrimeSpec::polynomial(f - t - t * t)};
}

int polynomial_valuation(const BivariatePolynomial& q, const PrimeSpec& p) {
    if (q.is_zero()) throw ArithmeticError("valuation of zero");
    switch (p.tag()) {
        case PrimeTag::VarT:
            return q.monomial_content().t;
        case PrimeTag::VarF:
            return q.monomial_content().f;
        case PrimeTag::Poly:
            break;
    }
    int k = 0;
    BivariatePolynomial rest = q;
    while (auto quotient = poly_exact_divide(rest, p.generator())) {
        rest = std::move(*quotient);
        ++k;
    }
    return k;
}

int prime_valuation(const RationalFunction2& r, const PrimeSpec& p) {
    if (r.is_zero()) throw ArithmeticError("valuation of zero");
    return polynomial_valuation(r.numerator(), p) - polynomial_valuation(r.denominator(), p);
}

namespace {

BivariatePolynomial strip_prime(const BivariatePolynomial& q, const PrimeSpec& p, int k) {
    if (k == 0) return q;
    if (p.tag() == PrimeTag::VarT) return q.shifted_down({0, k});
    if (p.tag() == PrimeTag::VarF) return q.shifted_down({k, 0});
    BivariatePolynomial rest = q;
    for (int i = 0; i < k; ++i) rest = *poly_exact_divide(rest, p.generator());
    return rest;
}

UnivariatePolynomial reduce_at(const BivariatePolynomial& q, const PrimeSpec& p) {
    switch (p.tag()) {
        case PrimeTag::VarT: {
            std::vector<CyclotomicNumber> c;
            for (const auto& [e, x] : q.terms()) {
                if (e.t != 0) continue;
                if (static_cast<int>(c.size()) <= e.f) c.resize(e.f + 1);
                c[e.f] += x;
            }
            return UnivariatePolynomial(std::move(c));
        }
        case PrimeTag::VarF: {
            std::vector<CyclotomicNumber> c;
            for (const auto& [e, x] : q.terms()) {
                if (e.f != 0) continue;
                if (static_cast<int>(c.size()) <= e.t) c.resize(e.t + 1);
                c[e.t] += x;
            }
            return UnivariatePolynomial(std::move(c));
        }
        case PrimeTag::Poly:
            break;
    }
    const BivariatePolynomial& g = p.generator();
    if (g.degree_f() != 1)
        throw ArithmeticError("residue field is not a rational function field for primes of f-degree above 1");
    // g = f + h(t): substitute f = -h(x).
    std::vector<CyclotomicNumber> h;
    for (const auto& [e, x] : g.terms()) {
        if (e.f != 0) continue;
        if (static_cast<int>(h.size()) <= e.t) h.resize(e.t + 1);
        h[e.t] -= x;
    }
    const UnivariatePolynomial root(std::move(h));
    UnivariatePolynomial out;
    for (const auto& [e, x] : q.terms()) {
        UnivariatePolynomial term(x);
        term = term * root.pow(static_cast<unsigned>(e.f)) * UnivariatePolynomial::x().pow(static_cast<unsigned>(e.t));
        out += term;
    }
    return out;
}

}  // namespace

UnivariateRational residue(const RationalFunction2& r, const PrimeSpec& p) {
    if (r.is_zero()) throw ArithmeticError("valuation of zero");
    const int vn = polynomial_valuation(r.numerator(), p);
    const int vd = polynomial_valuation(r.denominator(), p);
    if (vn != vd) throw ArithmeticError("not a unit at p");
    UnivariatePolynomial num = reduce_at(strip_prime(r.numerator(), p, vn), p);
    UnivariatePolynomial den = reduce_at(strip_prime(r.denominator(), p, vd), p);
    return UnivariateRational(std::move(num), std::move(den));
}

RankTwoValue lex_valuation(const RationalFunction2& r) {
    if (r.is_zero()) throw ArithmeticError("valuation of zero");
    const Exponent n = r.numerator().lex_min_exponent(), d = r.denominator().lex_min_exponent();
    return {static_cast<long>(n.f) - d.f, static_cast<long>(n.t) - d.t};
}

namespace {

RankTwoValue composite_polynomial_value(const BivariatePolynomial& q) {
    const int w = polynomial_valuation(q, PrimeSpec::f());
    // eta(q f^{-w}): reduce modulo f, a polynomial in t; u is its t-adic order.
    const UnivariateRational reduced = residue(RationalFunction2(q, BivariatePolynomial::monomial(1, w, 0)), PrimeSpec::f());
    const int u = reduced.numerator().x_adic_valuation() - reduced.denominator().x_adic_valuation();
    return {w, u};
}

}  // namespace

RankTwoValue lex_valuation_composite(const RationalFunction2& r) {
    if (r.is_zero()) throw ArithmeticError("valuation of zero");
    return composite_polynomial_value(r.numerator()) - composite_polynomial_value(r.denominator());
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

FactoredUnivariate FactoredUnivariate::from(const UnivariateRational& r, unsigned field_order) {
    if (r.is_zero()) throw ArithmeticError("power class of zero");
    FactoredUnivariate out;
    out.field_order = field_order;
    out.factors.emplace_back(r.numerator(), 1);
    out.factors.emplace_back(r.denominator(), -1);
    return out;
}

UnivariateRational FactoredUnivariate::value() const {
    UnivariateRational v{UnivariatePolynomial(constant)};
    for (const auto& [p, e] : factors) v = v * UnivariateRational(p).pow(e);
    return v;
}

FactoredUnivariate FactoredUnivariate::refined() const {
    FactoredUnivariate out;
    out.field_order = field_order;
    out.constant = constant;
    if (constant.is_zero()) throw ArithmeticError("power class of zero");
    std::vector<std::pair<UnivariatePolynomial, int>> items;
    auto push = [&](const UnivariatePolynomial& p, int e) {
        if (p.is_zero()) throw ArithmeticError("power class of zero");
        if (e == 0) return;
        out.constant *= p.leading_coefficient().pow(e);
        if (p.is_constant()) return;
        UnivariatePolynomial m = p.monic();
        for (auto& [q, k] : items)
            if (q == m) {
                k += e;
                return;
            }
        items.emplace_back(std::move(m), e);
    };
    for (const auto& [p, e] : factors) push(p, e);

    bool changed = true;
    while (changed) {
        changed = false;
        std::erase_if(items, [](const auto& it) { return it.second == 0; });
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            UnivariatePolynomial g = gcd(items[i].first, items[i].first.derivative());
            if (!g.is_constant()) {
                auto [p, e] = items[i];
                items.erase(items.begin() + static_cast<long>(i));
                push(divide(p, g).quotient, e);
                push(g, e);
                changed = true;
            }
        }
        for (std::size_t i = 0; i < items.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
                UnivariatePolynomial g = gcd(items[i].first, items[j].first);
                if (g.is_constant()) continue;
                auto [pi, ei] = items[i];
                auto [pj, ej] = items[j];
                items.erase(items.begin() + static_cast<long>(j));
                items.erase(items.begin() + static_cast<long>(i));
                push(divide(pi, g).quotient, ei);
                push(divide(pj, g).quotient, ej);
                push(g, ei + ej);
                changed = true;
            }
        }
    }
    std::erase_if(items, [](const auto& it) { return it.second == 0; });
    out.factors = std::move(items);
    return out;
}

namespace {

bool is_rational_power(const Rational& r, int d) {
    // r > 0 and reduced.
    mpz_class root;
    for (const mpz_class* part : {&r.get_num(), &r.get_den()}) {
        if (mpz_root(root.get_mpz_t(), part->get_mpz_t(), static_cast<unsigned long>(d)) == 0) return false;
    }
    return true;
}

}  // namespace

bool is_constant_power(const CyclotomicNumber& c, int d, unsigned field_order) {
    if (c.is_zero()) throw ArithmeticError("power test of zero");
    if (d <= 0) throw std::invalid_argument("power test needs d >= 1");
    if (d == 1) return true;
    const unsigned m = lcm_order(field_order, c.order());
    const CyclotomicNumber x = c.promoted(m);
    // Generator xi of the roots of unity of Q(zeta_m), a cyclic group of order w.
    const unsigned w = m % 2 == 0 ? m : 2 * m;
    const CyclotomicNumber xi = m % 2 == 0 ? CyclotomicNumber::root_of_unity(m) : -CyclotomicNumber::root_of_unity(m);
    const CyclotomicNumber xi_inv = xi.inverse();
    CyclotomicNumber probe = x;
    for (unsigned j = 0; j < w; ++j, probe *= xi_inv) {
        if (!probe.is_rational()) continue;
        Rational r = probe.rational_part();
        unsigned k = j;
        if (r < 0) {
            r = -r;
            k = (k + w / 2) % w;
        }
        const unsigned g = std::gcd(static_cast<unsigned>(d), w);
        if (is_rational_power(r, d)) return k % g == 0;
        if (euler_phi(m) == 1) return false;
        throw UnsupportedConstant();
    }
    throw UnsupportedConstant();
}

int power_class_order(const FactoredUnivariate& r, int n) {
    if (n <= 0) throw std::invalid_argument("power_class_order needs n >= 1");
    const FactoredUnivariate basis = r.refined();
    const auto ds = divisors(n);
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        const int d = *it;
        bool exponents_ok = true;
        for (const auto& [p, e] : basis.factors) exponents_ok = exponents_ok && e % d == 0;
        if (!exponents_ok) continue;
        if (is_constant_power(basis.constant, d, basis.field_order)) return n / d;
    }
    return n;
}

int power_class_order(const UnivariateRational& r, int n, unsigned field_order) {
    return power_class_order(FactoredUnivariate::from(r, field_order), n);
}

}  // namespace admissible
