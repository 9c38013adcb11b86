#include "admissible/symbol_algebra.hpp"

#include "admissible/linear_algebra.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace admissible {

SymbolAlgebraSpec SymbolAlgebraSpec::standard(int n, RationalFunction2 a, RationalFunction2 b) {
    if (n < 1) throw std::invalid_argument("symbol algebra degree must be positive");
    SymbolAlgebraSpec s{n, CyclotomicNumber::root_of_unity(static_cast<unsigned>(n)), std::move(a), std::move(b)};
    s.validate();
    return s;
}

SymbolAlgebraSpec SymbolAlgebraSpec::witness(int n) {
    const auto f = BivariatePolynomial::f(), t = BivariatePolynomial::t();
    return standard(n, RationalFunction2(f, f - t), RationalFunction2(f - t * t, f - t - t * t));
}

void SymbolAlgebraSpec::validate() const {
    if (n < 1) throw std::invalid_argument("symbol algebra degree must be positive");
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("symbol algebra needs nonzero a and b");
    CyclotomicNumber power = zeta;
    for (int k = 1; k < n; ++k, power *= zeta)
        if (power.is_one()) throw std::invalid_argument("zeta is not a primitive n-th root of unity");
    if (!power.is_one()) throw std::invalid_argument("zeta is not an n-th root of unity");
}

SymbolAlgebra::SymbolAlgebra(SymbolAlgebraSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    CyclotomicNumber power(1, spec_.zeta.order());
    for (int k = 0; k < spec_.n; ++k, power *= spec_.zeta) zeta_powers_.push_back(power);
}

SymbolAlgebraPtr SymbolAlgebra::create(SymbolAlgebraSpec spec) { return std::make_shared<const SymbolAlgebra>(std::move(spec)); }

const CyclotomicNumber& SymbolAlgebra::zeta_power(long k) const {
    long r = k % spec_.n;
    if (r < 0) r += spec_.n;
    return zeta_powers_[static_cast<std::size_t>(r)];
}

SymbolElement SymbolElement::zero(SymbolAlgebraPtr alg) { return SymbolElement(std::move(alg)); }

SymbolElement SymbolElement::scalar(SymbolAlgebraPtr alg, const RationalFunction2& c) {
    SymbolElement x(std::move(alg));
    x.add({0, 0}, c);
    return x;
}

SymbolElement SymbolElement::basis(SymbolAlgebraPtr alg, int i, int j) {
    const int n = alg->n();
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("basis exponent out of range");
    SymbolElement x(std::move(alg));
    x.add({i, j}, RationalFunction2(1));
    return x;
}

SymbolElement SymbolElement::from_vector(SymbolAlgebraPtr alg, const std::vector<RationalFunction2>& coords) {
    const int n = alg->n();
    if (coords.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("coordinate vector has wrong size");
    SymbolElement x(std::move(alg));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.add({i, j}, coords[static_cast<std::size_t>(i * n + j)]);
    return x;
}

RationalFunction2 SymbolElement::coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RationalFunction2() : it->second;
}

std::vector<RationalFunction2> SymbolElement::to_vector() const {
    const int n = alg_->n();
    std::vector<RationalFunction2> v(static_cast<std::size_t>(n * n));
    for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k.first * n + k.second)] = c;
    return v;
}

void SymbolElement::add(const Key& k, const RationalFunction2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_same(const SymbolElement& x, const SymbolElement& y) {
    if (x.algebra() == y.algebra()) return;
    const auto& s = x.algebra()->spec();
    const auto& r = y.algebra()->spec();
    if (s.n == r.n && s.zeta == r.zeta && s.a == r.a && s.b == r.b) return;
    throw std::invalid_argument("symbol algebra mismatch");
}

}  // namespace

SymbolElement& SymbolElement::operator+=(const SymbolElement& rhs) {
    require_same(*this, rhs);
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
}

SymbolElement& SymbolElement::operator-=(const SymbolElement& rhs) {
    require_same(*this, rhs);
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
}

SymbolElement SymbolElement::scaled(const RationalFunction2& c) const {
    SymbolElement out(alg_);
    for (const auto& [k, x] : terms_) out.add(k, x * c);
    return out;
}

SymbolElement SymbolElement::pow(unsigned k) const {
    SymbolElement result = scalar(alg_, RationalFunction2(1));
    for (unsigned i = 0; i < k; ++i) result = sym_mul(result, *this);
    return result;
}

bool operator==(const SymbolElement& a, const SymbolElement& b) {
    require_same(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, c] : a.terms_) {
        auto it = b.terms_.find(k);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

SymbolElement sym_mul(const SymbolElement& x, const SymbolElement& y) {
    require_same(x, y);
    const SymbolAlgebra& alg = *x.alg_;
    const int n = alg.n();
    const auto& a = alg.spec().a;
    const auto& b = alg.spec().b;
    SymbolElement out(x.alg_);
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            const auto [i, j] = kx;
            const auto [k, l] = ky;
            // Z^j Y^k = zeta^(-jk) Y^k Z^j follows from YZ = zeta ZY.
            RationalFunction2 c = cx * cy;
            const CyclotomicNumber& twist = alg.zeta_power(-static_cast<long>(j) * k);
            if (!twist.is_one()) c *= RationalFunction2(twist);
            int yi = i + k, zj = j + l;
            if (yi >= n) {
                yi -= n;
                c *= a;
            }
            if (zj >= n) {
                zj -= n;
                c *= b;
            }
            out.add({yi, zj}, c);
        }
    }
    return out;
}

bool value_vectors_generate_by_det(RankTwoValue va, RankTwoValue vb, int n) {
    const long det = va.w * vb.u - va.u * vb.w;
    return std::gcd(std::abs(det), static_cast<long>(n)) == 1;
}

std::size_t value_subgroup_order(RankTwoValue va, RankTwoValue vb, int n) {
    auto mod = [n](long x) { return static_cast<int>(((x % n) + n) % n); };
    std::set<std::pair<int, int>> span;
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r) span.emplace(mod(s * va.w + r * vb.w), mod(s * va.u + r * vb.u));
    return span.size();
}

DivisionCriterion division_value_criterion(const SymbolAlgebraSpec& spec) {
    if (spec.a.is_zero() || spec.b.is_zero()) throw std::invalid_argument("division criterion needs nonzero a and b");
    DivisionCriterion out;
    out.value_a = lex_valuation(spec.a);
    out.value_b = lex_valuation(spec.b);
    out.determinant = out.value_a.w * out.value_b.u - out.value_a.u * out.value_b.w;
    out.subgroup_order = value_subgroup_order(out.value_a, out.value_b, spec.n);
    const bool by_det = value_vectors_generate_by_det(out.value_a, out.value_b, spec.n);
    const bool by_enum = out.subgroup_order == static_cast<std::size_t>(spec.n) * spec.n;
    if (by_det != by_enum) throw std::logic_error("division criterion: determinant and enumeration disagree");
    out.division = by_det;
    return out;
}

MaximalSubfieldReport maximal_subfield_check(const SymbolAlgebraSpec& spec, int q, int q_prime) {
    if (q < 1 || q_prime < 1 || q * q_prime != spec.n) throw std::invalid_argument("maximal_subfield_check: n != q * q'");
    const auto alg = SymbolAlgebra::create(spec);
    const int n = spec.n;
    // y = Y^q', z = Z^q; for q' = n or q = n these wrap to the scalars a, b.
    const SymbolElement y = SymbolElement::y(alg).pow(static_cast<unsigned>(q_prime));
    const SymbolElement z = SymbolElement::z(alg).pow(static_cast<unsigned>(q));
    MaximalSubfieldReport out;
    out.commute = sym_mul(y, z) == sym_mul(z, y);
    out.y_relation = y.pow(static_cast<unsigned>(q)) == SymbolElement::scalar(alg, spec.a);
    out.z_relation = z.pow(static_cast<unsigned>(q_prime)) == SymbolElement::scalar(alg, spec.b);
    std::vector<std::vector<RationalFunction2>> rows;
    SymbolElement yi = SymbolElement::scalar(alg, RationalFunction2(1));
    for (int i = 0; i < q; ++i, yi = sym_mul(yi, y)) {
        SymbolElement term = yi;
        for (int j = 0; j < q_prime; ++j, term = sym_mul(term, z)) rows.push_back(term.to_vector());
    }
    out.dimension = matrix_rank(rows);
    out.passed = out.commute && out.y_relation && out.z_relation && out.dimension == static_cast<std::size_t>(n);
    return out;
}

std::vector<std::vector<RationalFunction2>> left_multiplication_matrix(const SymbolElement& x) {
    const int n = x.algebra()->n();
    const std::size_t dim = static_cast<std::size_t>(n * n);
    std::vector<std::vector<RationalFunction2>> m(dim, std::vector<RationalFunction2>(dim));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t col = static_cast<std::size_t>(i * n + j);
            const SymbolElement image = sym_mul(x, SymbolElement::basis(x.algebra(), i, j));
            for (const auto& [k, c] : image.terms()) m[static_cast<std::size_t>(k.first * n + k.second)][col] = c;
        }
    }
    return m;
}

InverseResult sym_inverse(const SymbolElement& x) {
    if (x.is_zero()) throw ArithmeticError("inverse of zero element");
    const int n = x.algebra()->n();
    if (n > 12) throw std::invalid_argument("sym_inverse supports n <= 12");
    const std::size_t dim = static_cast<std::size_t>(n * n);
    std::vector<RationalFunction2> rhs(dim);
    rhs[0] = RationalFunction2(1);
    const LinearSolveResult sol = solve_linear_system(left_multiplication_matrix(x), rhs);
    if (sol.kernel.empty()) return {true, SymbolElement::from_vector(x.algebra(), sol.solution)};
    // Zero divisor: scale the kernel vector so its first nonzero coordinate is 1.
    std::vector<RationalFunction2> w = sol.kernel.front();
    RationalFunction2 lead;
    for (const auto& c : w)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    const RationalFunction2 inv = lead.inverse();
    for (auto& c : w) c = c * inv;
    return {false, SymbolElement::from_vector(x.algebra(), w)};
}

}  // namespace admissible
