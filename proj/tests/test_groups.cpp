#include "doctest.h"

#include "admissible/group_theory.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace admissible;
using testing_support::CayleyTable;
using testing_support::from_cycles;

namespace {

const testing_support::CorpusGroup& corpus_group(const std::string& name) {
    static const auto corpus = testing_support::group_corpus();
    for (const auto& g : corpus)
        if (g.name == name) return g;
    throw std::invalid_argument("no corpus group " + name);
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("permutations") {
    const auto a = Permutation::parse_cycles("(0 1 2)", 3);
    const auto b = Permutation::parse_cycles("(0 1)", 3);
    // (a * b)(x) = a(b(x))
    CHECK((a * b)(0) == 2);
    CHECK((a * b).to_cycles() == "(0 2)");
    CHECK(Permutation::parse_cycles("(0 1)(1 2)", 3).to_cycles() == "(0 1 2)");
    CHECK(a.order() == 3);
    CHECK(a.inverse() == a.pow(2));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(Permutation(4).to_cycles() == "()");
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 5)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 1 0)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
}

TEST_CASE("enumeration examples") {
    CHECK(from_cycles(3, {"(0 1)", "(0 1 2)"}).order() == 6);
    CHECK(testing_support::quaternion_group().order() == 8);
    CHECK(PermGroup(3).order() == 1);
    for (const auto& g : testing_support::group_corpus()) {
        CAPTURE(g.name);
        CHECK(g.group.order() == g.order);
        const auto& elems = g.group.elements();
        CHECK(elems.front().is_identity());
        CHECK(as_set(elems).size() == elems.size());
    }
    PermGroup s5 = from_cycles(5, {"(0 1 2 3 4)", "(0 1)"});
    CHECK_THROWS_WITH_AS(s5.elements(100), "group too large for enumeration", GroupTooLarge);
    CHECK(s5.order() == 120);
}

TEST_CASE("enumeration bound from the environment") {
    ::setenv("ADMISSIBLE_MAX_GROUP_ORDER", "10", 1);
    CHECK(default_enumeration_bound() == 10);
    PermGroup s4 = from_cycles(4, {"(0 1 2 3)", "(0 1)"});
    CHECK_THROWS_AS(s4.elements(), GroupTooLarge);
    ::unsetenv("ADMISSIBLE_MAX_GROUP_ORDER");
    CHECK(default_enumeration_bound() == 200000);
}

TEST_CASE("group input formats") {
    const auto g = parse_group(R"J({"degree": 4, "generators": ["(0 1)", "(0 1 2 3)"]})J");
    CHECK(g.order() == 24);
    const auto h = parse_group("degree 4\n(0 1)\n(0 1 2 3)\n");
    CHECK(h.order() == 24);
    CHECK(parse_group(g.to_json()).to_json() == g.to_json());
    CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_group(R"J({"generators": []})J"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group(R"J({"degree": 3, "generators": ["(0 3)"]})J"), std::invalid_argument);
}

TEST_CASE("sylow examples") {
    const auto s4 = sylow(corpus_group("S4").group, 2);
    CHECK(s4.order == 8);
    CHECK_FALSE(s4.is_abelian);
    const auto c12 = sylow(corpus_group("C12").group, 2);
    CHECK(c12.order == 4);
    CHECK(c12.is_abelian);
    CHECK(c12.rank == 1);
    CHECK(c12.invariants == std::make_pair<std::size_t, std::size_t>(4, 1));
    const auto a4 = sylow(corpus_group("A4").group, 2);
    CHECK(a4.order == 4);
    CHECK(a4.rank == 2);
    CHECK(a4.invariants == std::make_pair<std::size_t, std::size_t>(2, 2));
    CHECK(sylow(corpus_group("A4").group, 5).order == 1);
    CHECK_THROWS_AS(sylow(corpus_group("A4").group, 4), std::invalid_argument);
}

TEST_CASE("sylow subgroups have full p-part order and are conjugate to every oracle Sylow subgroup") {
    for (const auto& g : testing_support::group_corpus()) {
        CAPTURE(g.name);
        const CayleyTable table(g.group);
        const auto subgroups = table.all_subgroups();
        const auto& elems = g.group.elements();
        for (const auto& [p, k] : factorize(g.order)) {
            const auto s = sylow(g.group, static_cast<unsigned>(p));
            const std::size_t target = testing_support::p_part(g.order, p);
            CHECK(s.order == target);
            const auto mine = as_set(s.subgroup.elements());
            for (const auto& x : mine) CHECK(g.group.contains(x));
            for (const auto& sub : subgroups) {
                const auto idx = testing_support::members(sub);
                if (idx.size() != target) continue;
                std::set<Permutation> other;
                for (std::size_t i : idx) other.insert(elems[i]);
                bool conjugate = false;
                for (const auto& x : elems) {
                    std::set<Permutation> conj;
                    for (const auto& y : mine) conj.insert(x * y * x.inverse());
                    if (conj == other) {
                        conjugate = true;
                        break;
                    }
                }
                CHECK(conjugate);
            }
        }
    }
}

TEST_CASE("abelian rank and decomposition") {
    const auto rank = [](const char* name, unsigned p) { return abelian_rank(corpus_group(name).group, p); };
    CHECK(rank("(Z/2)^3", 2).rank == 3);
    CHECK(rank("Z/4 x Z/2", 2).rank == 2);
    CHECK_FALSE(rank("Q8", 2).is_abelian);
    CHECK_FALSE(rank("Q8", 2).rank.has_value());

    const auto check_decomposition = [](const PermGroup& p_group, unsigned p, std::size_t q, std::size_t q_prime) {
        const auto d = abelian_decompose(p_group, p);
        CHECK(d.q == q);
        CHECK(d.q_prime == q_prime);
        std::set<Permutation> product;
        for (const auto& x : cyclic_subgroup(d.g))
            for (const auto& y : cyclic_subgroup(d.h)) product.insert(x * y);
        CHECK(product == as_set(p_group.elements()));
    };
    check_decomposition(corpus_group("Z/4 x Z/2").group, 2, 4, 2);
    check_decomposition(from_cycles(8, {"(0 1 2 3 4 5 6 7)"}), 2, 8, 1);
    check_decomposition(corpus_group("(Z/3)^2").group, 3, 3, 3);
    check_decomposition(corpus_group("C4 x C4").group, 2, 4, 4);
    CHECK_THROWS_WITH(abelian_decompose(corpus_group("(Z/2)^3").group, 2), "not rank <= 2 abelian");
    CHECK_THROWS_WITH(abelian_decompose(corpus_group("Q8").group, 2), "not rank <= 2 abelian");
}

TEST_CASE("is_metacyclic examples and witnesses") {
    const auto q8 = is_metacyclic(corpus_group("Q8").group);
    REQUIRE(q8.has_value());
    CHECK(q8->normal_order == 4);
    CHECK_FALSE(is_metacyclic(corpus_group("(Z/2)^3").group).has_value());
    CHECK(is_metacyclic(corpus_group("C6").group).has_value());
    for (const auto& g : testing_support::group_corpus()) {
        const auto w = is_metacyclic(g.group);
        if (!w) continue;
        CAPTURE(g.name);
        const auto n = as_set(cyclic_subgroup(w->normal_generator));
        CHECK(n.size() == w->normal_order);
        for (const auto& s : g.group.elements()) {
            std::set<Permutation> conj;
            for (const auto& x : n) conj.insert(s * x * s.inverse());
            CHECK(conj == n);
        }
        // cosets y^k N for k < |G|/|N| are pairwise distinct
        std::set<Permutation> covered;
        Permutation y = g.group.identity();
        for (std::size_t k = 0; k < g.order / n.size(); ++k, y = y * w->quotient_generator)
            for (const auto& x : n) covered.insert(y * x);
        CHECK(covered.size() == g.order);
    }
}

TEST_CASE("admissibility verdicts agree with the all-subgroups oracle") {
    for (const auto& g : testing_support::group_corpus()) {
        CAPTURE(g.name);
        const auto oracle = testing_support::oracle_verdict(g.group);
        const auto rank2 = admissibility_verdict(g.group, VerdictMode::Rank2);
        const auto meta = admissibility_verdict(g.group, VerdictMode::Metacyclic);
        CHECK(rank2.admissible == g.rank2);
        CHECK(meta.admissible == g.sylows_metacyclic);
        CHECK(rank2.admissible == oracle.rank2);
        CHECK(meta.admissible == oracle.sylows_metacyclic);
        CHECK(is_metacyclic(g.group).has_value() == oracle.group_metacyclic);
    }
}

TEST_CASE("excluded prime") {
    const auto& g = corpus_group("SL(2,3)").group;
    CHECK_FALSE(admissibility_verdict(g, VerdictMode::Rank2).admissible);
    const auto v = admissibility_verdict(g, VerdictMode::Rank2, 2u);
    CHECK(v.admissible);
    CHECK(v.primes[0].excluded);
    CHECK_FALSE(v.primes[1].excluded);
}

TEST_CASE("metacyclic descriptors") {
    const auto s3 = metacyclic_descriptor_group({3, 2, 2});
    CHECK(s3.group.order() == 6);
    CHECK_FALSE(s3.abelian_by_generators);
    const auto c20 = metacyclic_descriptor_group({5, 4, 1});
    CHECK(c20.group.order() == 20);
    CHECK(c20.abelian_by_generators);
    const auto d4 = metacyclic_descriptor_group({4, 2, 3});
    CHECK(d4.group.order() == 8);
    CHECK_FALSE(d4.abelian_by_generators);
    CHECK_FALSE(admissibility_verdict(d4.group, VerdictMode::Rank2).admissible);
    CHECK_THROWS_AS(metacyclic_descriptor_group({4, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(metacyclic_descriptor_group({5, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(metacyclic_descriptor_group({5, 2, 7}), std::invalid_argument);
}

TEST_CASE("descriptor abelian flag equals i = 1 mod e, with a Cayley-table oracle for small orders") {
    for (int e = 1; e <= 64; ++e) {
        for (int m = 1; e * m <= 64; ++m) {
            for (int i = 1; i < std::max(e, 2); ++i) {
                const MetacyclicDescriptor d{e, m, i};
                try {
                    d.validate();
                } catch (const std::invalid_argument&) {
                    continue;
                }
                const auto g = metacyclic_descriptor_group(d);
                CHECK(g.abelian_by_generators == (i % e == 1 % e));
                CHECK(g.abelian_by_generators == g.abelian_by_exponent);
                if (e * m <= 24) {
                    const CayleyTable t(g.group);
                    CHECK(testing_support::oracle_abelian(t, CayleyTable::Subset(t.size(), true)) == g.abelian_by_generators);
                }
            }
        }
    }
}
