#include "doctest.h"

#include "admissible/crossed_product.hpp"
#include "admissible/expression.hpp"
#include "cocycle_corpus.hpp"
#include "support.hpp"

#include <set>

using namespace admissible;
using testing_support::kummer;

namespace {

RationalFunction2 rf(const char* text, unsigned order = 0) { return parse_rational_function(text, order); }

// (q, q') with q' | q, both powers of one prime, qq' <= 36.
std::vector<std::pair<int, int>> sylow_shapes() {
    std::vector<std::pair<int, int>> out;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (int q = p; q <= 36; q *= p)
            for (int qp = 1; qp <= q && q * qp <= 36; qp *= p) out.emplace_back(q, qp);
    return out;
}

std::vector<KummerElement> kummer_basis(const KummerAlgebraPtr& alg) {
    std::vector<KummerElement> out;
    for (int i = 0; i < alg->q(); ++i)
        for (int j = 0; j < alg->q_prime(); ++j) out.push_back(KummerElement::basis(alg, i, j));
    return out;
}

}  // namespace

TEST_CASE("Kummer defining relations and Galois action examples") {
    for (auto [q, qp] : {std::pair{4, 1}, std::pair{3, 3}, std::pair{4, 2}}) {
        const auto alg = kummer(q, qp);
        const auto y = KummerElement::basis(alg, 1, 0), z = qp > 1 ? KummerElement::basis(alg, 0, 1) : KummerElement::scalar(alg, alg->b());
        CHECK(KummerElement::basis(alg, q - 1, 0) * y == KummerElement::scalar(alg, alg->a()));
        CHECK(KummerElement::monomial(alg, q, 0) == KummerElement::scalar(alg, alg->a()));
        CHECK(KummerElement::monomial(alg, 0, qp) == KummerElement::scalar(alg, alg->b()));
        CHECK(galois_apply({1, 0}, y) == y.scaled(RationalFunction2(alg->zeta_q(1))));
        CHECK(galois_apply({1, 0}, z) == z);
        if (qp > 1) CHECK(galois_apply({0, 1}, z) == z.scaled(RationalFunction2(alg->zeta_q_prime(1))));
        CHECK(alg->zeta_q(q).is_one());
        CHECK(alg->zeta_q_prime(qp).is_one());
        const auto yz = y * z;
        for (const auto& g : alg->group_elements())
            for (const auto& h : alg->group_elements())
                CHECK(galois_apply(g, galois_apply(h, yz)) == galois_apply(alg->group_add(g, h), yz));
    }
    CHECK(KummerElement::basis(kummer(2, 1), 1, 0).to_string() == "(1)*y");
    CHECK_THROWS_AS(KummerAlgebra::create(0, 1, rf("f"), rf("t")), std::invalid_argument);
    CHECK_THROWS_AS(KummerAlgebra::create(2, 1, RationalFunction2(), rf("t")), std::invalid_argument);
    CHECK(KummerElement::basis(kummer(2, 2), 1, 1).to_string() == "(1)*y*z");
    // instances are compared structurally
    CHECK_NOTHROW(KummerElement::basis(kummer(2, 2), 1, 0) * KummerElement::basis(kummer(2, 2), 1, 0));
    CHECK_THROWS_AS(KummerElement::basis(kummer(2, 2), 1, 0) * KummerElement::basis(kummer(4, 1), 1, 0),
                    std::invalid_argument);
}

TEST_CASE("Kummer multiplication is commutative and associative on all basis triples") {
    for (auto [q, qp] : sylow_shapes()) {
        CAPTURE(q);
        CAPTURE(qp);
        const auto alg = kummer(q, qp);
        const auto basis = kummer_basis(alg);
        std::vector<std::vector<KummerElement>> products(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) products[i].push_back(basis[i] * basis[j]);
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i)
            for (std::size_t j = 0; j < basis.size() && ok; ++j) {
                ok = products[i][j] == products[j][i];
                for (std::size_t k = 0; k < basis.size() && ok; ++k) ok = products[i][j] * basis[k] == basis[i] * products[j][k];
            }
        CHECK(ok);
    }
}

TEST_CASE("Galois action is by algebra automorphisms") {
    for (auto [q, qp] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{4, 2}, std::pair{3, 3}, std::pair{5, 1}, std::pair{4, 4}}) {
        const auto alg = kummer(q, qp);
        const auto basis = kummer_basis(alg);
        const auto group = alg->group_elements();
        bool ok = true;
        for (const auto& g : group)
            for (const auto& x : basis) {
                for (const auto& y : basis) ok = ok && galois_apply(g, x * y) == galois_apply(g, x) * galois_apply(g, y);
                for (const auto& h : group) ok = ok && galois_apply(alg->group_add(g, h), x) == galois_apply(g, galois_apply(h, x));
            }
        CHECK(ok);
    }
}

TEST_CASE("fixed subspace of the full group action is the scalars") {
    for (auto [q, qp] : sylow_shapes()) {
        CAPTURE(q);
        CAPTURE(qp);
        CHECK(fixed_subspace_dimension(kummer(q, qp)) == 1);
    }
}

TEST_CASE("Kummer inverses and units") {
    const auto alg = kummer(3, 1);
    const auto y = KummerElement::basis(alg, 1, 0);
    const auto inv = kummer_inverse(y);
    REQUIRE(inv.has_value());
    CHECK(*inv == KummerElement::basis(alg, 2, 0).scaled(alg->a().inverse()));
    CHECK(kummer_is_unit(y));
    const auto x = KummerElement::scalar(alg, RationalFunction2(1)) + y;
    const auto xi = kummer_inverse(x);
    REQUIRE(xi.has_value());
    CHECK(x * *xi == KummerElement::scalar(alg, RationalFunction2(1)));

    const auto split = KummerAlgebra::create(2, 1, RationalFunction2(1), RationalFunction2(1));
    const auto zero_divisor = KummerElement::scalar(split, RationalFunction2(1)) + KummerElement::basis(split, 1, 0);
    CHECK_FALSE(kummer_inverse(zero_divisor).has_value());
    CHECK_FALSE(kummer_is_unit(zero_divisor));
    CHECK_FALSE(kummer_is_unit(KummerElement::zero(split)));
}

TEST_CASE("nondegenerate_kummer_check examples") {
    const auto p = [](const char* s) { return PrimeSpec::parse(s); };
    const auto a = nondegenerate_kummer_check(4, 1, rf("f/(f - t)"), RationalFunction2(1), {p("f"), p("t"), p("f - t")});
    CHECK(a.certified);
    REQUIRE(a.certificates.size() == 1);
    CHECK(a.certificates[0].d == 2);
    CHECK(a.certificates[0].prime == "f");
    CHECK(a.certificates[0].reason == "valuation");

    CHECK_FALSE(nondegenerate_kummer_check(2, 1, rf("f^2"), RationalFunction2(1), {p("f")}).certified);

    const auto b = nondegenerate_kummer_check(1, 3, RationalFunction2(1), rf("(f - t^2)/(f - t - t^2)"),
                                              {p("f - t^2"), p("f - t - t^2")});
    CHECK(b.certified);
    REQUIRE(b.certificates.size() == 1);
    CHECK(b.certificates[0].element == "b");
    CHECK(b.certificates[0].prime == "f - t^2");

    // residue obstruction: v_t(t + 1) = 0 but its residue x + 1 is not a square
    const auto r = nondegenerate_kummer_check(2, 1, rf("f + 1"), RationalFunction2(1), {p("t")});
    CHECK(r.certified);
    CHECK(r.certificates[0].reason == "residue");
    // a square never certifies, whatever the prime list
    CHECK_FALSE(nondegenerate_kummer_check(2, 1, rf("(f + 1)^2/t^2"), RationalFunction2(1), standard_primes()).certified);
    CHECK(prime_divisors(12) == std::vector<int>{2, 3});
    CHECK(prime_divisors(1).empty());
}

TEST_CASE("cocycle_check examples") {
    const auto alg = kummer(2, 2);
    CHECK(cocycle_check(trivial_cocycle(alg)).passed);
    CHECK(cocycle_check(carry_cocycle(alg, rf("f"), rf("t"))).passed);
    const auto sym = cocycle_check(symbol_cocycle(alg));
    CHECK(sym.passed);
    CHECK(sym.exhaustive);
    CHECK(sym.triples_checked == 64);

    Cocycle bad = trivial_cocycle(alg);
    bad.set(1, 1, KummerElement::basis(alg, 1, 0));
    const auto r = cocycle_check(bad);
    CHECK_FALSE(r.passed);
    REQUIRE(r.failing.has_value());
    const auto [s, t, u] = *r.failing;
    CHECK((s == 1 || t == 1 || u == 1));

    const auto split = KummerAlgebra::create(2, 1, RationalFunction2(1), RationalFunction2(1));
    Cocycle singular = trivial_cocycle(split);
    singular.set(1, 1, KummerElement::scalar(split, RationalFunction2(1)) + KummerElement::basis(split, 1, 0));
    CHECK_THROWS_WITH_AS(cocycle_check(singular), "non-invertible cocycle value", ArithmeticError);

    // large groups are sampled
    const auto big = cocycle_check(symbol_cocycle(kummer(5, 5)), 500);
    CHECK(big.passed);
    CHECK_FALSE(big.exhaustive);
    CHECK(big.triples_checked == 500);
}

TEST_CASE("symbol cocycle matches the symbol algebra relations") {
    // In the symbol algebra (a, b)_{qq'} with u_(s, s') = Z^-s Y^s', the
    // relations u_sigma u_tau = c(sigma, tau) u_{sigma tau} hold.  Y^q' = y,
    // Z^q = z, so u_(1,0) = Z^-1 acts as y -> zeta_q y and u_(0,1) = Y as
    // z -> zeta_q' z; the check below recovers c(sigma, 0) = c(0, tau) = 1.
    for (auto [q, qp] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
        const auto alg = kummer(q, qp);
        const auto c = symbol_cocycle(alg);
        const auto one = KummerElement::scalar(alg, RationalFunction2(1));
        for (std::size_t s = 0; s < c.group_order(); ++s) {
            CHECK(c(s, 0) == one);
            CHECK(c(0, s) == one);
        }
        CHECK(cocycle_check(c).passed);
    }
}

TEST_CASE("crossed product examples") {
    const auto alg = kummer(3, 1);
    const auto cp = CrossedProduct::create(trivial_cocycle(alg));
    CHECK(cp->dimension() == 9);
    const std::size_t n = cp->group_order();
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t inv = 0;
        while (cp->compose(s, inv) != 0) ++inv;
        CHECK(CrossedProductElement::u(cp, s) * CrossedProductElement::u(cp, inv) == CrossedProductElement::u(cp, 0));
        for (int i = 0; i < 3; ++i) {
            const auto x = KummerElement::basis(alg, i, 0).scaled(rf("f + t"));
            CHECK(CrossedProductElement::u(cp, s) * CrossedProductElement::term(cp, 0, x) ==
                  CrossedProductElement::term(cp, s, galois_apply(alg->group_elements()[s], x)));
        }
    }
    for (auto [q, qp] : {std::pair{2, 2}, std::pair{4, 1}, std::pair{3, 2}}) {
        const auto c = CrossedProduct::create(symbol_cocycle(kummer(q, qp)));
        CHECK(c->dimension() == static_cast<std::size_t>(q * qp * q * qp));
    }
}

TEST_CASE("associativity holds exactly when the cocycle identity holds") {
    for (const auto& [name, c] : testing_support::positive_cocycles()) {
        CAPTURE(name);
        const auto check = cocycle_check(c);
        const auto assoc = check_associativity(CrossedProduct::create(c));
        CHECK(check.passed);
        CHECK(assoc.associative);
        CHECK(assoc.scope == AssociativityScope::BasisTriples);
        const std::size_t dim = CrossedProduct::create(c)->dimension();
        CHECK(assoc.triples_checked == dim * dim * dim);
    }
    for (const auto& [name, c] : testing_support::negative_cocycles()) {
        CAPTURE(name);
        const auto check = cocycle_check(c);
        const auto cp = CrossedProduct::create(c);
        const auto assoc = check_associativity(cp);
        CHECK_FALSE(check.passed);
        CHECK_FALSE(assoc.associative);
        REQUIRE(assoc.failing.has_value());
        // the located triple really fails
        const auto& [x, y, w] = *assoc.failing;
        const auto bx = CrossedProductElement::basis(cp, x.sigma, x.i, x.j);
        const auto by = CrossedProductElement::basis(cp, y.sigma, y.i, y.j);
        const auto bw = CrossedProductElement::basis(cp, w.sigma, w.i, w.j);
        CHECK_FALSE((bx * by) * bw == bx * (by * bw));
        // restricted to the u's the failure is already visible
        CHECK_FALSE(check_associativity(cp, AssociativityScope::UnitTriples).associative);
    }
}

TEST_CASE("induced algebras") {
    const PermGroup s3 = testing_support::from_cycles(3, {"(0 1)", "(0 1 2)"});
    const PermGroup trivial(3);
    const auto split = induced_algebra(trivial, s3, "L");
    CHECK(split.components == 6);
    CHECK(split.split());
    for (const auto& act : split.generator_actions) {
        for (const auto& h : act.labels) CHECK(h.is_identity());
        // regular action: no fixed components for a nontrivial element
        for (std::size_t k = 0; k < 6; ++k) CHECK(act.coset_image[k] != k);
        CHECK(std::set<std::size_t>(act.coset_image.begin(), act.coset_image.end()).size() == 6);
    }

    const auto whole = induced_algebra(s3, s3, "L");
    CHECK(whole.components == 1);
    CHECK_FALSE(whole.split());
    for (const auto& g : s3.elements()) {
        const auto act = whole.act(g);
        CHECK(act.coset_image == std::vector<std::size_t>{0});
        CHECK(act.labels[0] == g);
    }

    const PermGroup c4 = testing_support::from_cycles(4, {"(0 1 2 3)"});
    const PermGroup c2 = testing_support::from_cycles(4, {"(0 2)(1 3)"});
    const auto index2 = induced_algebra(c2, c4, "L");
    CHECK(index2.components == 2);
    const auto swap = index2.act(c4.generators()[0]);
    CHECK(swap.coset_image == std::vector<std::size_t>{1, 0});
    for (const auto& h : swap.labels) CHECK(c2.contains(h));
    CHECK(index2.act(c2.generators()[0]).coset_image == std::vector<std::size_t>{0, 1});

    // the labels form a homomorphism-compatible action: act(gh) = act(g) act(h)
    for (const auto& g : c4.elements())
        for (const auto& h : c4.elements()) {
            const auto ag = index2.act(g), ah = index2.act(h), agh = index2.act(g * h);
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(agh.coset_image[k] == ag.coset_image[ah.coset_image[k]]);
                CHECK(agh.labels[k] == ag.labels[ah.coset_image[k]] * ah.labels[k]);
            }
        }

    const PermGroup outside = testing_support::from_cycles(4, {"(0 1)"});
    CHECK_THROWS_WITH_AS(induced_algebra(outside, c4, "L"), "subgroup is not contained in the group", std::invalid_argument);
}
