#include "admissible/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace admissible {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Integer> multiply_integer(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic integer polynomial.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        Integer c = num[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (num[k] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return quot;
}

// (q, r) with a = q*b + r.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {QPoly{}, a};
    QPoly q(a.size() - b.size() + 1, 0);
    const Rational& lead = b.back();
    const std::size_t db = b.size() - 1;
    for (std::size_t k = a.size() - 1;; --k) {
        if (a[k] != 0) {
            Rational c = a[k] / lead;
            q[k - db] = c;
            for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
        }
        if (k == db) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw ArithmeticError("cyclotomic_polynomial: order must be positive");
    std::vector<Integer> xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    std::vector<Integer> divisor_product{1};
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) divisor_product = multiply_integer(divisor_product, cyclotomic_polynomial(d));
    return divide_monic(xm, divisor_product);
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

std::shared_ptr<const CyclotomicField> cyclotomic_field(unsigned m) {
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) slot = std::make_shared<const CyclotomicField>(m);
    return slot;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(const Rational& value, unsigned order) : field_(cyclotomic_field(order)) {
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::from_coefficients(unsigned m, std::vector<Rational> coeffs) {
    CyclotomicNumber out(Rational(0), m);
    for (auto& c : coeffs) c.canonicalize();
    out.reduce_in_place(coeffs);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = i < coeffs.size() ? coeffs[i] : Rational(0);
    return out;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned m, long k) {
    long e = k % static_cast<long>(m);
    if (e < 0) e += m;
    std::vector<Rational> c(e + 1, Rational(0));
    c[e] = 1;
    return from_coefficients(m, std::move(c));
}

void CyclotomicNumber::reduce_in_place(std::vector<Rational>& work) const {
    auto mod = field_->modulus();
    const std::size_t deg = mod.size() - 1;
    for (std::size_t k = work.size(); k-- > deg;) {
        if (work[k] == 0) continue;
        Rational c = work[k];
        for (std::size_t j = 0; j <= deg; ++j) work[k - deg + j] -= c * mod[j];
    }
    if (work.size() > deg) work.resize(deg);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

CyclotomicNumber CyclotomicNumber::promoted(unsigned multiple) const {
    if (multiple == order()) return *this;
    if (multiple % order() != 0) throw ArithmeticError("promotion to an order that is not a multiple");
    const unsigned step = multiple / order();
    std::vector<Rational> work((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) work[i * step] = coeffs_[i];
    CyclotomicNumber out(Rational(0), multiple);
    out.reduce_in_place(work);
    for (std::size_t i = 0; i < out.coeffs_.size() && i < work.size(); ++i) out.coeffs_[i] = work[i];
    return out;
}

void CyclotomicNumber::unify(CyclotomicNumber& other) {
    if (field_ == other.field_) return;
    const unsigned m = lcm_order(order(), other.order());
    if (m != order()) *this = promoted(m);
    if (m != other.order()) other = other.promoted(m);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (field_ == rhs.field_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    CyclotomicNumber r = rhs;
    unify(r);
    return *this += r;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    if (field_ == rhs.field_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    CyclotomicNumber r = rhs;
    unify(r);
    return *this -= r;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    if (field_ != rhs.field_) {
        if (rhs.is_rational()) {
            const Rational c = rhs.coeffs_[0];
            for (auto& x : coeffs_) x *= c;
            return *this;
        }
        if (is_rational()) {
            const Rational c = coeffs_[0];
            *this = rhs;
            for (auto& x : coeffs_) x *= c;
            return *this;
        }
        CyclotomicNumber r = rhs;
        unify(r);
        return *this *= r;
    }
    if (coeffs_.size() == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    std::vector<Rational> work(2 * coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            if (rhs.coeffs_[j] != 0) work[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    reduce_in_place(work);
    coeffs_ = std::move(work);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (is_rational()) {
        CyclotomicNumber out = *this;
        out.coeffs_[0] = 1 / coeffs_[0];
        return out;
    }
    // Extended Euclid: s*x + t*Phi = 1 in Q[X].
    QPoly modulus(field_->modulus().begin(), field_->modulus().end());
    QPoly r0 = modulus, r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    QPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Phi is irreducible.
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: modulus not irreducible");
    const Rational scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    CyclotomicNumber out(field_, std::vector<Rational>(coeffs_.size(), Rational(0)));
    out.reduce_in_place(s0);
    for (std::size_t i = 0; i < s0.size() && i < out.coeffs_.size(); ++i) out.coeffs_[i] = s0[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    CyclotomicNumber result(Rational(1), order());
    CyclotomicNumber base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
    if (lhs.field_ == rhs.field_) return lhs.coeffs_ == rhs.coeffs_;
    if (lhs.is_rational() && rhs.is_rational()) return lhs.coeffs_[0] == rhs.coeffs_[0];
    CyclotomicNumber a = lhs, b = rhs;
    a.unify(b);
    return a.coeffs_ == b.coeffs_;
}

std::string CyclotomicNumber::to_string(const std::string& symbol) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << symbol;
        if (k > 1) os << '^' << k;
    }
    if (first) os << '0';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) { return os << x.to_string(); }

void ProductAccumulator::add_product(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_ != field_ || b.field_ != field_) throw ArithmeticError("accumulator operand in a different field");
    const std::size_t d = a.coeffs_.size();
    if (work_.empty()) work_.assign(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.coeffs_[j] != 0) work_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
}

CyclotomicNumber ProductAccumulator::value() const {
    if (work_.empty()) return CyclotomicNumber(Rational(0), field_ ? field_->order() : 1);
    CyclotomicNumber out(Rational(0), field_->order());
    std::vector<Rational> work = work_;
    out.reduce_in_place(work);
    for (std::size_t i = 0; i < out.coeffs_.size() && i < work.size(); ++i) out.coeffs_[i] = work[i];
    return out;
}

}  // namespace admissible
