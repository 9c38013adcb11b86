#include "admissible/kummer.hpp"

#include "admissible/linear_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace admissible {

KummerAlgebra::KummerAlgebra(int q, int q_prime, RationalFunction2 a, RationalFunction2 b)
    : q_(q), q_prime_(q_prime), a_(std::move(a)), b_(std::move(b)) {
    if (q < 1 || q_prime < 1) throw std::invalid_argument("Kummer algebra needs q, q' >= 1");
    if (a_.is_zero() || b_.is_zero()) throw std::invalid_argument("Kummer algebra needs nonzero a and b");
    const unsigned order = static_cast<unsigned>(q * q_prime);
    zeta_ = CyclotomicNumber::root_of_unity(order);
    CyclotomicNumber power(1, order);
    for (unsigned k = 0; k < order; ++k, power *= zeta_) zeta_powers_.push_back(power);
}

KummerAlgebraPtr KummerAlgebra::create(int q, int q_prime, RationalFunction2 a, RationalFunction2 b) {
    return std::make_shared<const KummerAlgebra>(q, q_prime, std::move(a), std::move(b));
}

namespace {

long mod(long x, long m) {
    const long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

CyclotomicNumber KummerAlgebra::zeta_q(long k) const {
    return zeta_powers_[static_cast<std::size_t>(mod(k * q_prime_, q_ * q_prime_))];
}

CyclotomicNumber KummerAlgebra::zeta_q_prime(long k) const {
    return zeta_powers_[static_cast<std::size_t>(mod(k * q_, q_ * q_prime_))];
}

std::vector<GaloisElement> KummerAlgebra::group_elements() const {
    std::vector<GaloisElement> out;
    for (int s = 0; s < q_; ++s)
        for (int sp = 0; sp < q_prime_; ++sp) out.push_back({s, sp});
    return out;
}

std::size_t KummerAlgebra::group_index(GaloisElement g) const {
    return static_cast<std::size_t>(mod(g.s, q_) * q_prime_ + mod(g.sp, q_prime_));
}

GaloisElement KummerAlgebra::group_add(GaloisElement g, GaloisElement h) const {
    return {static_cast<int>(mod(g.s + h.s, q_)), static_cast<int>(mod(g.sp + h.sp, q_prime_))};
}

KummerElement::KummerElement(KummerAlgebraPtr alg) : alg_(std::move(alg)) {
    if (!alg_) throw std::invalid_argument("null Kummer algebra");
    coords_.resize(static_cast<std::size_t>(alg_->dimension()));
}

KummerElement KummerElement::zero(KummerAlgebraPtr alg) { return KummerElement(std::move(alg)); }

KummerElement KummerElement::scalar(KummerAlgebraPtr alg, const RationalFunction2& c) {
    KummerElement x(std::move(alg));
    x.coords_[0] = c;
    return x;
}

KummerElement KummerElement::basis(KummerAlgebraPtr alg, int i, int j) {
    if (i < 0 || j < 0 || i >= alg->q() || j >= alg->q_prime()) throw std::out_of_range("Kummer basis index out of range");
    KummerElement x(std::move(alg));
    x.coords_[static_cast<std::size_t>(i * x.alg_->q_prime() + j)] = RationalFunction2(1);
    return x;
}

KummerElement KummerElement::monomial(KummerAlgebraPtr alg, int i, int j) {
    if (i < 0 || j < 0) throw std::out_of_range("Kummer monomial needs non-negative exponents");
    const int q = alg->q(), qp = alg->q_prime();
    RationalFunction2 c = alg->a().pow(i / q) * alg->b().pow(j / qp);
    KummerElement x(std::move(alg));
    x.coords_[static_cast<std::size_t>((i % q) * qp + j % qp)] = c;
    return x;
}

KummerElement KummerElement::from_vector(KummerAlgebraPtr alg, std::vector<RationalFunction2> coords) {
    KummerElement x(std::move(alg));
    if (coords.size() != x.coords_.size()) throw std::invalid_argument("Kummer coordinate vector has wrong size");
    x.coords_ = std::move(coords);
    return x;
}

bool KummerElement::is_zero() const { return support_size() == 0; }

std::size_t KummerElement::support_size() const {
    std::size_t n = 0;
    for (const auto& c : coords_)
        if (!c.is_zero()) ++n;
    return n;
}

namespace {

void require_same(const KummerElement& x, const KummerElement& y) {
    if (x.algebra() == y.algebra()) return;
    const auto& s = *x.algebra();
    const auto& r = *y.algebra();
    if (s.q() == r.q() && s.q_prime() == r.q_prime() && s.a() == r.a() && s.b() == r.b()) return;
    throw std::invalid_argument("Kummer algebra mismatch");
}

}  // namespace

KummerElement& KummerElement::operator+=(const KummerElement& rhs) {
    require_same(*this, rhs);
    for (std::size_t k = 0; k < coords_.size(); ++k)
        if (!rhs.coords_[k].is_zero()) coords_[k] += rhs.coords_[k];
    return *this;
}

KummerElement& KummerElement::operator-=(const KummerElement& rhs) {
    require_same(*this, rhs);
    for (std::size_t k = 0; k < coords_.size(); ++k)
        if (!rhs.coords_[k].is_zero()) coords_[k] -= rhs.coords_[k];
    return *this;
}

KummerElement KummerElement::scaled(const RationalFunction2& c) const {
    KummerElement out(alg_);
    for (std::size_t k = 0; k < coords_.size(); ++k)
        if (!coords_[k].is_zero()) out.coords_[k] = coords_[k] * c;
    return out;
}

bool operator==(const KummerElement& x, const KummerElement& y) {
    require_same(x, y);
    for (std::size_t k = 0; k < x.coords_.size(); ++k)
        if (!(x.coords_[k] == y.coords_[k])) return false;
    return true;
}

std::string KummerElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    const int qp = alg_->q_prime();
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (coords_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const int i = static_cast<int>(k) / qp, j = static_cast<int>(k) % qp;
        out << "(" << coords_[k].to_string() << ")";
        if (i) out << (i == 1 ? "*y" : "*y^" + std::to_string(i));
        if (j) out << (j == 1 ? "*z" : "*z^" + std::to_string(j));
    }
    return first ? "0" : out.str();
}

KummerElement kummer_mul(const KummerElement& x, const KummerElement& y) {
    require_same(x, y);
    const KummerAlgebra& alg = *x.alg_;
    const int q = alg.q(), qp = alg.q_prime();
    KummerElement out(x.alg_);
    for (std::size_t kx = 0; kx < x.coords_.size(); ++kx) {
        if (x.coords_[kx].is_zero()) continue;
        for (std::size_t ky = 0; ky < y.coords_.size(); ++ky) {
            if (y.coords_[ky].is_zero()) continue;
            int i = static_cast<int>(kx) / qp + static_cast<int>(ky) / qp;
            int j = static_cast<int>(kx) % qp + static_cast<int>(ky) % qp;
            RationalFunction2 c = x.coords_[kx] * y.coords_[ky];
            if (i >= q) {
                i -= q;
                c *= alg.a();
            }
            if (j >= qp) {
                j -= qp;
                c *= alg.b();
            }
            out.coords_[static_cast<std::size_t>(i * qp + j)] += c;
        }
    }
    return out;
}

KummerElement galois_apply(GaloisElement g, const KummerElement& x) {
    const KummerAlgebra& alg = *x.alg_;
    const int qp = alg.q_prime();
    KummerElement out(x.alg_);
    for (std::size_t k = 0; k < x.coords_.size(); ++k) {
        if (x.coords_[k].is_zero()) continue;
        const long i = static_cast<long>(k) / qp, j = static_cast<long>(k) % qp;
        const CyclotomicNumber w = alg.zeta_q(g.s * i) * alg.zeta_q_prime(g.sp * j);
        out.coords_[k] = w.is_one() ? x.coords_[k] : x.coords_[k] * RationalFunction2(w);
    }
    return out;
}

std::optional<KummerElement> kummer_inverse(const KummerElement& x) {
    if (x.is_zero()) return std::nullopt;
    const auto& alg = x.algebra();
    const std::size_t dim = static_cast<std::size_t>(alg->dimension());
    Matrix<RationalFunction2> m(dim, std::vector<RationalFunction2>(dim));
    for (int i = 0; i < alg->q(); ++i) {
        for (int j = 0; j < alg->q_prime(); ++j) {
            const std::size_t col = static_cast<std::size_t>(i * alg->q_prime() + j);
            const KummerElement image = kummer_mul(x, KummerElement::basis(alg, i, j));
            for (std::size_t r = 0; r < dim; ++r) m[r][col] = image.coordinates()[r];
        }
    }
    std::vector<RationalFunction2> rhs(dim);
    rhs[0] = RationalFunction2(1);
    const LinearSolveResult sol = solve_linear_system(m, rhs);
    if (!sol.consistent || !sol.kernel.empty()) return std::nullopt;
    return KummerElement::from_vector(alg, sol.solution);
}

bool kummer_is_unit(const KummerElement& x) {
    const std::size_t support = x.support_size();
    if (support == 0) return false;
    // c * y^i z^j has inverse c^-1 a^-1 b^-1 y^(q-i) z^(q'-j) up to wraparound.
    if (support == 1) return true;
    return kummer_inverse(x).has_value();
}

std::size_t fixed_subspace_dimension(const KummerAlgebraPtr& alg) {
    const std::size_t dim = static_cast<std::size_t>(alg->dimension());
    Matrix<RationalFunction2> stacked;
    for (GaloisElement g : {GaloisElement{1, 0}, GaloisElement{0, 1}}) {
        Matrix<RationalFunction2> block(dim, std::vector<RationalFunction2>(dim));
        for (int i = 0; i < alg->q(); ++i) {
            for (int j = 0; j < alg->q_prime(); ++j) {
                const std::size_t col = static_cast<std::size_t>(i * alg->q_prime() + j);
                const KummerElement e = KummerElement::basis(alg, i, j);
                const KummerElement diff = galois_apply(g, e) - e;
                for (std::size_t r = 0; r < dim; ++r) block[r][col] = diff.coordinates()[r];
            }
        }
        stacked.insert(stacked.end(), block.begin(), block.end());
    }
    return kernel_basis(stacked).size();
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

KummerCertificate certify_not_power(const std::string& name, const RationalFunction2& x, int d,
                                    const std::vector<PrimeSpec>& primes, unsigned field_order) {
    KummerCertificate cert{name, d, false, "", ""};
    for (const auto& p : primes) {
        const int v = prime_valuation(x, p);
        if (v % d != 0) {
            cert.certified = true;
            cert.prime = p.to_string();
            cert.reason = "valuation";
            return cert;
        }
    }
    // Every valuation is divisible by d: look for a residue that is not a d-th power.
    for (const auto& p : primes) {
        try {
            const int v = prime_valuation(x, p);
            const RationalFunction2 unit = x * RationalFunction2(p.generator()).pow(-v);
            if (power_class_order(residue(unit, p), d, field_order) != 1) {
                cert.certified = true;
                cert.prime = p.to_string();
                cert.reason = "residue";
                return cert;
            }
        } catch (const std::domain_error&) {
        } catch (const std::invalid_argument&) {
        }
    }
    return cert;
}

}  // namespace

NondegeneracyReport nondegenerate_kummer_check(int q, int q_prime, const RationalFunction2& a,
                                               const RationalFunction2& b, const std::vector<PrimeSpec>& primes,
                                               unsigned field_order) {
    if (q < 1 || q_prime < 1) throw std::invalid_argument("nondegenerate_kummer_check needs q, q' >= 1");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("nondegenerate_kummer_check needs nonzero a and b");
    // The base field always contains the qq'-th roots of unity.
    const unsigned order = lcm_order(field_order, static_cast<unsigned>(q * q_prime));
    NondegeneracyReport out;
    out.certified = true;
    for (int d : prime_divisors(q)) out.certificates.push_back(certify_not_power("a", a, d, primes, order));
    for (int d : prime_divisors(q_prime)) out.certificates.push_back(certify_not_power("b", b, d, primes, order));
    for (const auto& c : out.certificates) out.certified = out.certified && c.certified;
    return out;
}

}  // namespace admissible
