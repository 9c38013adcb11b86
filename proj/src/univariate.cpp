#include "admissible/univariate.hpp"

#include <sstream>

namespace admissible {

UnivariatePolynomial::UnivariatePolynomial(const CyclotomicNumber& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<CyclotomicNumber> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CyclotomicNumber UnivariatePolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CyclotomicNumber();
    return coeffs_[k];
}

int UnivariatePolynomial::x_adic_valuation() const {
    if (is_zero()) throw ArithmeticError("valuation of zero");
    int k = 0;
    while (coeffs_[k].is_zero()) ++k;
    return k;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CyclotomicNumber> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    UnivariatePolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned e) const {
    UnivariatePolynomial result(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    std::vector<CyclotomicNumber> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * CyclotomicNumber(static_cast<long>(k)));
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const CyclotomicNumber& c) const {
    UnivariatePolynomial out = *this;
    for (auto& x : out.coeffs_) x *= c;
    out.trim();
    return out;
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

UniDivision divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero");
    std::vector<CyclotomicNumber> rem = a.coefficients();
    const auto& bc = b.coefficients();
    if (rem.size() < bc.size()) return {UnivariatePolynomial(), a};
    std::vector<CyclotomicNumber> quot(rem.size() - bc.size() + 1);
    const CyclotomicNumber lead_inv = bc.back().inverse();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = rem.size() - 1;; --k) {
        if (!rem[k].is_zero()) {
            CyclotomicNumber c = rem[k] * lead_inv;
            quot[k - db] = c;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * bc[j];
        }
        if (k == db) break;
    }
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    UnivariatePolynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UnivariatePolynomial r = divide(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = r.monic();
    }
    return r0.monic();
}

std::string UnivariatePolynomial::to_string(const std::string& var, const std::string& zeta_symbol) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const CyclotomicNumber& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = false;
        std::string coeff;
        if (c.is_rational()) {
            negative = c.rational_part() < 0;
            Rational mag = abs(c.rational_part());
            if (mag != 1 || k == 0) coeff = mag.get_str();
        } else {
            coeff = "(" + c.to_string(zeta_symbol) + ")";
        }
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        os << coeff;
        if (k > 0) {
            if (!coeff.empty()) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

UnivariateRational::UnivariateRational(UnivariatePolynomial num, UnivariatePolynomial den) {
    if (den.is_zero()) throw ArithmeticError("division by zero");
    if (num.is_zero()) {
        num_ = UnivariatePolynomial();
        den_ = UnivariatePolynomial(1);
        return;
    }
    UnivariatePolynomial g = gcd(num, den);
    if (!g.is_constant()) {
        num = divide(num, g).quotient;
        den = divide(den, g).quotient;
    }
    const CyclotomicNumber lead_inv = den.leading_coefficient().inverse();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
}

UnivariateRational operator*(const UnivariateRational& a, const UnivariateRational& b) {
    return UnivariateRational(a.num_ * b.num_, a.den_ * b.den_);
}

UnivariateRational operator+(const UnivariateRational& a, const UnivariateRational& b) {
    return UnivariateRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UnivariateRational UnivariateRational::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return UnivariateRational(den_, num_);
}

UnivariateRational UnivariateRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return UnivariateRational(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string UnivariateRational::to_string(const std::string& var, const std::string& zeta_symbol) const {
    auto wrap = [&](const UnivariatePolynomial& p) {
        std::string s = p.to_string(var, zeta_symbol);
        int nonzero = 0;
        for (const auto& c : p.coefficients()) nonzero += c.is_zero() ? 0 : 1;
        bool single_factor = nonzero == 1 && p.leading_coefficient().is_rational();
        return single_factor ? s : "(" + s + ")";
    };
    if (den_.is_constant() && den_.leading_coefficient().is_one()) return num_.to_string(var, zeta_symbol);
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace admissible
