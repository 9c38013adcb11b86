#include "admissible/rational_function.hpp"

#include <algorithm>

namespace admissible {

RationalFunction2::RationalFunction2(BivariatePolynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction2::RationalFunction2(BivariatePolynomial num, BivariatePolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ArithmeticError("division by zero");
    normalize();
}

void RationalFunction2::normalize() {
    if (num_.is_zero()) {
        den_ = BivariatePolynomial(1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.leading_term().second.is_one()) {
            num_ *= den_.leading_term().second.inverse();
            den_ = BivariatePolynomial(1);
        }
        return;
    }
    const Exponent cn = num_.monomial_content(), cd = den_.monomial_content();
    const Exponent common{std::min(cn.f, cd.f), std::min(cn.t, cd.t)};
    if (common.f > 0 || common.t > 0) {
        num_ = num_.shifted_down(common);
        den_ = den_.shifted_down(common);
    }
    if (!den_.is_constant()) {
        if (auto q = poly_exact_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = BivariatePolynomial(1);
            return;
        }
        if (num_.size() <= den_.size() && !num_.is_constant()) {
            if (auto q = poly_exact_divide(den_, num_)) {
                den_ = std::move(*q);
                num_ = BivariatePolynomial(1);
            }
        }
    }
    const CyclotomicNumber lead = den_.leading_term().second;
    if (!lead.is_one()) {
        const CyclotomicNumber inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

bool RationalFunction2::is_one() const { return num_ == den_; }

RationalFunction2 RationalFunction2::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return RationalFunction2(den_, num_);
}

RationalFunction2 RationalFunction2::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    const auto e = static_cast<unsigned>(exponent);
    return RationalFunction2(num_.pow(e), den_.pow(e));
}

RationalFunction2& RationalFunction2::operator+=(const RationalFunction2& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

RationalFunction2& RationalFunction2::operator-=(const RationalFunction2& rhs) { return *this += -rhs; }

RationalFunction2& RationalFunction2::operator*=(const RationalFunction2& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = RationalFunction2();
    if (rhs.den_.is_constant() && den_.is_constant()) {
        num_ *= rhs.num_;
        normalize();
        return *this;
    }
    // Cancel the obvious cross factors before multiplying.
    BivariatePolynomial n1 = num_, d1 = den_, n2 = rhs.num_, d2 = rhs.den_;
    if (n1 == d2) {
        n1 = BivariatePolynomial(1);
        d2 = BivariatePolynomial(1);
    }
    if (n2 == d1) {
        n2 = BivariatePolynomial(1);
        d1 = BivariatePolynomial(1);
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize();
    return *this;
}

RationalFunction2 RationalFunction2::operator-() const {
    RationalFunction2 out = *this;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const RationalFunction2& a, const RationalFunction2& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction2::to_string(const std::string& zeta_symbol) const {
    const std::string n = num_.to_string(zeta_symbol);
    if (den_.is_constant()) return n;
    const bool num_atomic = num_.size() == 1 && num_.leading_term().second.is_rational() &&
                            num_.leading_term().second.rational_part() >= 0;
    // The denominator must not contain '*' unparenthesized: "f/f*t" would
    // re-parse as (f/f)*t.
    const auto& [de, dc] = den_.leading_term();
    const bool den_atomic = den_.size() == 1 && dc.is_one() && (de.f == 0 || de.t == 0);
    const std::string d = den_.to_string(zeta_symbol);
    return (num_atomic ? n : "(" + n + ")") + "/" + (den_atomic ? d : "(" + d + ")");
}

}  // namespace admissible
