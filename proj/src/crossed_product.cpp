#include "admissible/crossed_product.hpp"

#include "json.hpp"

#include <random>
#include <stdexcept>

namespace admissible {

Cocycle::Cocycle(KummerAlgebraPtr alg)
    : alg_(std::move(alg)), order_(static_cast<std::size_t>(alg_->dimension())) {
    values_.assign(order_ * order_, KummerElement::scalar(alg_, RationalFunction2(1)));
}

void Cocycle::set(std::size_t s, std::size_t t, KummerElement value) {
    if (s >= order_ || t >= order_) throw std::out_of_range("cocycle index out of range");
    if (value.algebra() != alg_) value = KummerElement::from_vector(alg_, value.coordinates());
    values_[s * order_ + t] = std::move(value);
}

std::string Cocycle::to_json() const {
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t s = 0; s < order_; ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t t = 0; t < order_; ++t) row.push_back((*this)(s, t).to_string());
        table.push_back(std::move(row));
    }
    nlohmann::json out{{"q", alg_->q()},
                       {"q_prime", alg_->q_prime()},
                       {"a", alg_->a().to_string()},
                       {"b", alg_->b().to_string()},
                       {"table", std::move(table)}};
    return out.dump();
}

Cocycle trivial_cocycle(const KummerAlgebraPtr& alg) { return Cocycle(alg); }

Cocycle carry_cocycle(const KummerAlgebraPtr& alg, const RationalFunction2& alpha, const RationalFunction2& beta) {
    Cocycle c(alg);
    const auto elems = alg->group_elements();
    for (std::size_t s = 0; s < elems.size(); ++s) {
        for (std::size_t t = 0; t < elems.size(); ++t) {
            RationalFunction2 v(1);
            if (elems[s].s + elems[t].s >= alg->q()) v *= alpha;
            if (elems[s].sp + elems[t].sp >= alg->q_prime()) v *= beta;
            c.set(s, t, KummerElement::scalar(alg, v));
        }
    }
    return c;
}

Cocycle symbol_cocycle(const KummerAlgebraPtr& alg) {
    Cocycle c(alg);
    const int q = alg->q(), qp = alg->q_prime();
    const auto elems = alg->group_elements();
    // z^-1 = b^-1 z^(q'-1)
    const KummerElement z_inv = KummerElement::monomial(alg, 0, qp - 1).scaled(alg->b().inverse());
    const KummerElement y = KummerElement::monomial(alg, 1, 0);
    const long n = static_cast<long>(q) * qp;
    for (std::size_t s = 0; s < elems.size(); ++s) {
        for (std::size_t t = 0; t < elems.size(); ++t) {
            const GaloisElement g = elems[s], h = elems[t];
            long e = (-static_cast<long>(g.sp) * h.s) % n;
            if (e < 0) e += n;
            KummerElement v = KummerElement::scalar(alg, RationalFunction2(alg->zeta().pow(e)));
            if (g.s + h.s >= q) v = v * z_inv;
            if (g.sp + h.sp >= qp) v = v * y.scaled(RationalFunction2(alg->zeta_q((g.s + h.s) % q)));
            c.set(s, t, std::move(v));
        }
    }
    return c;
}

CocycleCheck cocycle_check(const Cocycle& c, std::size_t samples, std::uint64_t seed) {
    const auto& alg = c.algebra();
    const auto elems = alg->group_elements();
    const std::size_t order = elems.size();
    for (std::size_t s = 0; s < order; ++s)
        for (std::size_t t = 0; t < order; ++t)
            if (!kummer_is_unit(c(s, t))) throw ArithmeticError("non-invertible cocycle value");

    auto compose = [&](std::size_t s, std::size_t t) { return alg->group_index(alg->group_add(elems[s], elems[t])); };
    CocycleCheck out;
    auto test = [&](std::size_t s, std::size_t t, std::size_t r) {
        ++out.triples_checked;
        const KummerElement lhs = c(s, t) * c(compose(s, t), r);
        const KummerElement rhs = galois_apply(elems[s], c(t, r)) * c(s, compose(t, r));
        if (lhs == rhs) return true;
        out.passed = false;
        out.failing = std::array<std::size_t, 3>{s, t, r};
        return false;
    };

    if (order <= 24) {
        for (std::size_t s = 0; s < order; ++s)
            for (std::size_t t = 0; t < order; ++t)
                for (std::size_t r = 0; r < order; ++r)
                    if (!test(s, t, r)) return out;
        return out;
    }
    out.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t k = 0; k < samples; ++k) {
        const std::size_t s = pick(rng), t = pick(rng), r = pick(rng);
        if (!test(s, t, r)) return out;
    }
    return out;
}

CrossedProduct::CrossedProduct(Cocycle c) : cocycle_(std::move(c)), group_(cocycle_.algebra()->group_elements()) {
    const auto& alg = cocycle_.algebra();
    table_.reserve(group_.size() * group_.size());
    for (const auto& g : group_)
        for (const auto& h : group_) table_.push_back(alg->group_index(alg->group_add(g, h)));
}

CrossedProductPtr CrossedProduct::create(Cocycle c) { return std::make_shared<const CrossedProduct>(std::move(c)); }

std::size_t CrossedProduct::dimension() const { return group_.size() * static_cast<std::size_t>(field()->dimension()); }

CrossedProductElement::CrossedProductElement(CrossedProductPtr cp) : cp_(std::move(cp)) {
    if (!cp_) throw std::invalid_argument("null crossed product");
    coeffs_.assign(cp_->group_order(), KummerElement::zero(cp_->field()));
}

CrossedProductElement CrossedProductElement::zero(CrossedProductPtr cp) { return CrossedProductElement(std::move(cp)); }

CrossedProductElement CrossedProductElement::term(CrossedProductPtr cp, std::size_t sigma, KummerElement x) {
    CrossedProductElement out(std::move(cp));
    if (sigma >= out.coeffs_.size()) throw std::out_of_range("group index out of range");
    out.coeffs_[sigma] = KummerElement::zero(out.cp_->field()) + x;
    return out;
}

CrossedProductElement CrossedProductElement::u(CrossedProductPtr cp, std::size_t sigma) {
    auto field = cp->field();
    return term(std::move(cp), sigma, KummerElement::scalar(field, RationalFunction2(1)));
}

CrossedProductElement CrossedProductElement::basis(CrossedProductPtr cp, std::size_t sigma, int i, int j) {
    auto field = cp->field();
    return term(std::move(cp), sigma, KummerElement::basis(field, i, j));
}

bool CrossedProductElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void require_same(const CrossedProductElement& x, const CrossedProductElement& y) {
    if (x.algebra() != y.algebra()) throw std::invalid_argument("crossed product mismatch");
}

}  // namespace

CrossedProductElement& CrossedProductElement::operator+=(const CrossedProductElement& rhs) {
    require_same(*this, rhs);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += rhs.coeffs_[s];
    return *this;
}

bool operator==(const CrossedProductElement& a, const CrossedProductElement& b) {
    require_same(a, b);
    for (std::size_t s = 0; s < a.coeffs_.size(); ++s)
        if (!(a.coeffs_[s] == b.coeffs_[s])) return false;
    return true;
}

CrossedProductElement crossed_product_mul(const CrossedProductElement& x, const CrossedProductElement& y) {
    require_same(x, y);
    const CrossedProduct& cp = *x.cp_;
    CrossedProductElement out(x.cp_);
    // (x u_s)(y u_t) = x s(y) u_s u_t = x s(y) c(s, t) u_st
    for (std::size_t s = 0; s < cp.group_order(); ++s) {
        if (x.coeffs_[s].is_zero()) continue;
        for (std::size_t t = 0; t < cp.group_order(); ++t) {
            if (y.coeffs_[t].is_zero()) continue;
            const KummerElement moved = galois_apply(cp.group()[s], y.coeffs_[t]);
            out.coeffs_[cp.compose(s, t)] += x.coeffs_[s] * moved * cp.cocycle()(s, t);
        }
    }
    return out;
}

AssociativityCheck check_associativity(const CrossedProductPtr& cp, std::optional<AssociativityScope> scope) {
    AssociativityCheck out;
    out.scope = scope.value_or(cp->dimension() <= 36 ? AssociativityScope::BasisTriples : AssociativityScope::UnitTriples);
    std::vector<BasisLabel> labels;
    std::vector<CrossedProductElement> basis;
    const auto& field = cp->field();
    for (std::size_t s = 0; s < cp->group_order(); ++s) {
        if (out.scope == AssociativityScope::UnitTriples) {
            labels.push_back({s, 0, 0});
            continue;
        }
        for (int i = 0; i < field->q(); ++i)
            for (int j = 0; j < field->q_prime(); ++j) labels.push_back({s, i, j});
    }
    for (const auto& l : labels) basis.push_back(CrossedProductElement::basis(cp, l.sigma, l.i, l.j));

    const std::size_t m = basis.size();
    std::vector<CrossedProductElement> pair_products;
    pair_products.reserve(m * m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) pair_products.push_back(basis[x] * basis[y]);

    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            for (std::size_t w = 0; w < m; ++w) {
                ++out.triples_checked;
                if (pair_products[x * m + y] * basis[w] == basis[x] * pair_products[y * m + w]) continue;
                out.associative = false;
                out.failing = std::array<BasisLabel, 3>{labels[x], labels[y], labels[w]};
                return out;
            }
        }
    }
    return out;
}

InducedAlgebra::Action InducedAlgebra::act(const Permutation& g) const {
    if (!group.contains(g)) throw std::invalid_argument("element is not in the group");
    Action a{g, {}, {}};
    for (const auto& r : coset_representatives) {
        const Permutation image = g * r;
        const std::size_t k = coset_of[*group.index_of(image)];
        a.coset_image.push_back(k);
        a.labels.push_back(coset_representatives[k].inverse() * image);
    }
    return a;
}

InducedAlgebra induced_algebra(const PermGroup& h, const PermGroup& g, const std::string& label) {
    if (h.degree() != g.degree()) throw std::invalid_argument("subgroup is not contained in the group");
    for (const auto& x : h.generators())
        if (!g.contains(x)) throw std::invalid_argument("subgroup is not contained in the group");

    InducedAlgebra out;
    out.label = label;
    out.group = g;
    out.subgroup_order = h.order();
    const auto& elems = g.elements();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    out.coset_of.assign(elems.size(), unassigned);
    for (std::size_t k = 0; k < elems.size(); ++k) {
        if (out.coset_of[k] != unassigned) continue;
        const std::size_t coset = out.coset_representatives.size();
        out.coset_representatives.push_back(elems[k]);
        for (const auto& x : h.elements()) out.coset_of[*g.index_of(elems[k] * x)] = coset;
    }
    out.components = out.coset_representatives.size();
    for (const auto& s : g.generators()) out.generator_actions.push_back(out.act(s));
    return out;
}

}  // namespace admissible
