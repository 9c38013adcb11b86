#include "admissible/witness.hpp"

#include "admissible/expression.hpp"
#include "admissible/kummer.hpp"

#include <numeric>
#include <random>

namespace admissible {

using nlohmann::json;

std::string WitnessCertificate::serialize() const { return data.dump(2) + "\n"; }

WitnessCertificate WitnessCertificate::parse(const std::string& text) {
    try {
        return {json::parse(text)};
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate: ") + e.what());
    }
}

std::size_t gcd_of_indices(const std::vector<std::size_t>& sylow_orders, std::size_t order) {
    if (sylow_orders.empty()) return order;
    std::size_t g = 0;
    for (std::size_t s : sylow_orders) {
        if (s == 0 || order % s) throw std::invalid_argument("Sylow order does not divide the group order");
        g = std::gcd(g, order / s);
    }
    return g;
}

bool gcd_index_check(const std::vector<SylowData>& sylows, std::size_t order) {
    std::vector<std::size_t> orders;
    for (const auto& s : sylows) orders.push_back(s.order);
    return gcd_of_indices(orders, order) == 1;
}

json division_check_json(const SymbolAlgebraSpec& spec) {
    const DivisionCriterion d = division_value_criterion(spec);
    return {{"passed", d.division},
            {"value_a", {d.value_a.w, d.value_a.u}},
            {"value_b", {d.value_b.w, d.value_b.u}},
            {"determinant", d.determinant},
            {"subgroup_order", d.subgroup_order}};
}

json maximal_subfield_json(const SymbolAlgebraSpec& spec, int q, int q_prime) {
    const MaximalSubfieldReport r = maximal_subfield_check(spec, q, q_prime);
    return {{"passed", r.passed},
            {"commute", r.commute},
            {"y_relation", r.y_relation},
            {"z_relation", r.z_relation},
            {"dimension", r.dimension}};
}

json branch_split_json(const SymbolAlgebraSpec& spec) {
    const UnivariateRational ra = residue(spec.a, PrimeSpec::t());
    const UnivariateRational rb = residue(spec.b, PrimeSpec::t());
    return {{"passed", ra.is_one() && rb.is_one()}, {"residue_a", ra.to_string()}, {"residue_b", rb.to_string()}};
}

json nondegenerate_kummer_json(const SymbolAlgebraSpec& spec, int q, int q_prime) {
    const NondegeneracyReport r =
        nondegenerate_kummer_check(q, q_prime, spec.a, spec.b, standard_primes(), spec.zeta_order());
    json certs = json::array();
    for (const auto& c : r.certificates)
        certs.push_back({{"element", c.element}, {"d", c.d}, {"certified", c.certified}, {"prime", c.prime}, {"reason", c.reason}});
    return {{"passed", r.certified}, {"certificates", std::move(certs)}};
}

json ramification_json(const SymbolAlgebraSpec& spec) {
    const auto primes = standard_primes();
    const RamificationWitness w = determined_by_ramification(spec, primes);
    json data = json::array();
    for (const auto& p : primes) data.push_back(json::parse(tame_symbol(spec, p).to_json()));
    return {{"passed", w.determined}, {"witness_prime", w.prime ? w.prime->to_string() : ""}, {"data", std::move(data)}};
}

json relations_json(const SymbolAlgebraSpec& spec, std::uint64_t seed) {
    const auto alg = SymbolAlgebra::create(spec);
    const int n = spec.n;
    const SymbolElement y = SymbolElement::y(alg), z = SymbolElement::z(alg);
    const bool y_power = y.pow(static_cast<unsigned>(n)) == SymbolElement::scalar(alg, spec.a);
    const bool z_power = z.pow(static_cast<unsigned>(n)) == SymbolElement::scalar(alg, spec.b);
    const bool twist = y * z == (z * y).scaled(RationalFunction2(spec.zeta));

    constexpr int samples = 64;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    bool associative = true;
    for (int k = 0; k < samples && associative; ++k) {
        SymbolElement e[3] = {SymbolElement::zero(alg), SymbolElement::zero(alg), SymbolElement::zero(alg)};
        for (auto& x : e) {
            const int i = pick(rng);
            x = SymbolElement::basis(alg, i, pick(rng));
        }
        associative = (e[0] * e[1]) * e[2] == e[0] * (e[1] * e[2]);
    }
    return {{"passed", y_power && z_power && twist && associative},
            {"y_power", y_power},
            {"z_power", z_power},
            {"twist", twist},
            {"associativity_samples", samples}};
}

namespace {

json spec_json(const SymbolAlgebraSpec& spec) {
    return {{"n", spec.n}, {"zeta_order", spec.zeta_order()}, {"a", spec.a.to_string()}, {"b", spec.b.to_string()}};
}

SymbolAlgebraSpec spec_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const unsigned order = j.at("zeta_order").get<unsigned>();
    if (n < 1 || order != static_cast<unsigned>(n)) throw std::invalid_argument("spec: zeta order must equal n");
    SymbolAlgebraSpec s{n, CyclotomicNumber::root_of_unity(order),
                        parse_rational_function(j.at("a").get<std::string>(), order),
                        parse_rational_function(j.at("b").get<std::string>(), order)};
    s.validate();
    return s;
}

// Ordered list of the per-prime checks; names are the certificate keys.
json run_checks(const SymbolAlgebraSpec& spec, int q, int q_prime) {
    json checks;
    checks["division_criterion"] = division_check_json(spec);
    checks["maximal_subfield"] = maximal_subfield_json(spec, q, q_prime);
    checks["branch_split"] = branch_split_json(spec);
    checks["nondegenerate_kummer"] = nondegenerate_kummer_json(spec, q, q_prime);
    checks["determined_by_ramification"] = ramification_json(spec);
    checks["relations"] = relations_json(spec, kWitnessSeed);
    return checks;
}

std::size_t ipow(std::size_t p, unsigned k) {
    std::size_t r = 1;
    while (k--) r *= p;
    return r;
}

}  // namespace

WitnessCertificate build_witness(const PermGroup& g) {
    const Verdict verdict = admissibility_verdict(g, VerdictMode::Rank2);
    if (!verdict.admissible) throw NotAdmissible();

    json cert;
    cert["certificate_version"] = kCertificateVersion;
    cert["toolkit_version"] = kToolkitVersion;
    cert["seed"] = kWitnessSeed;
    cert["group"] = json::parse(g.to_json());
    cert["order"] = verdict.order;
    cert["verdict"] = {{"mode", "rank2"}, {"admissible", true}};
    cert["factorization"] = json::array();
    cert["primes"] = json::array();

    std::vector<std::size_t> sylow_orders;
    for (const auto& report : verdict.primes) {
        cert["factorization"].push_back({report.p, report.exponent});
        const auto [q, q_prime] = *report.sylow.invariants;
        const int n = static_cast<int>(q * q_prime);
        const SymbolAlgebraSpec spec = SymbolAlgebraSpec::witness(n);
        json checks = run_checks(spec, static_cast<int>(q), static_cast<int>(q_prime));
        for (const auto& [name, result] : checks.items())
            if (!result.at("passed").get<bool>())
                throw std::logic_error("witness check " + name + " failed at p = " + std::to_string(report.p));
        cert["primes"].push_back({{"p", report.p},
                                  {"sylow_order", report.sylow.order},
                                  {"q", q},
                                  {"q_prime", q_prime},
                                  {"n", n},
                                  {"spec", spec_json(spec)},
                                  {"checks", std::move(checks)}});
        sylow_orders.push_back(report.sylow.order);
    }
    const std::size_t gcd = gcd_of_indices(sylow_orders, verdict.order);
    json indices = json::array();
    for (std::size_t s : sylow_orders) indices.push_back(verdict.order / s);
    cert["global"] = {{"sylow_indices", std::move(indices)}, {"gcd_sylow_indices", gcd}, {"passed", gcd == 1}};
    if (gcd != 1) throw std::logic_error("witness check gcd_sylow_indices failed");
    return {std::move(cert)};
}

json VerificationReport::to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"passed", passed}, {"checks", std::move(checks_json)}};
}

VerificationReport verify_certificate(const std::string& certificate_text, const std::string& group_text) {
    VerificationReport report;
    auto record = [&](std::string name, bool ok, std::string detail = "") {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    // Runs one check, turning any exception into a failure.
    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            record(name, false, e.what());
        }
    };

    WitnessCertificate cert;
    PermGroup g(0);
    try {
        cert = WitnessCertificate::parse(certificate_text);
    } catch (const std::exception& e) {
        record("parse_certificate", false, e.what());
        return report;
    }
    try {
        g = parse_group(group_text);
    } catch (const std::exception& e) {
        record("parse_group", false, e.what());
        return report;
    }
    const json& c = cert.data;

    guarded("format", [&] {
        const bool ok = c.at("certificate_version") == kCertificateVersion && c.at("toolkit_version") == kToolkitVersion &&
                        c.at("seed") == kWitnessSeed;
        record("format", ok, ok ? "" : "version or seed differs");
    });
    guarded("group_echo", [&] {
        const bool ok = c.at("group") == json::parse(g.to_json());
        record("group_echo", ok, ok ? "" : "certificate was issued for a different group");
    });

    Verdict verdict;
    guarded("verdict", [&] {
        verdict = admissibility_verdict(g, VerdictMode::Rank2);
        const bool ok = verdict.admissible && c.at("verdict").at("mode") == "rank2" &&
                        c.at("verdict").at("admissible") == true && c.at("order") == verdict.order;
        record("verdict", ok, ok ? "" : "recomputed verdict or order differs");
    });

    std::vector<std::size_t> sylow_orders;
    guarded("primes", [&] {
        const json& primes = c.at("primes");
        const json& factorization = c.at("factorization");
        const auto actual = factorize(g.order());
        bool ok = primes.is_array() && factorization.is_array() && primes.size() == actual.size() &&
                  factorization.size() == actual.size();
        for (std::size_t k = 0; ok && k < actual.size(); ++k)
            ok = factorization[k] == json{actual[k].first, actual[k].second} && primes[k].at("p") == actual[k].first;
        record("primes", ok, ok ? "" : "prime list does not match the group order");
        if (!ok) return;
        for (std::size_t k = 0; k < actual.size(); ++k) {
            const json& rec = primes[k];
            const std::string tag = "p=" + std::to_string(actual[k].first) + " ";
            guarded(tag + "structure", [&] {
                const std::size_t sylow_order = rec.at("sylow_order").get<std::size_t>();
                const int q = rec.at("q").get<int>(), q_prime = rec.at("q_prime").get<int>(), n = rec.at("n").get<int>();
                const bool structure = sylow_order == ipow(actual[k].first, actual[k].second) && q >= q_prime &&
                                       q_prime >= 1 && static_cast<std::size_t>(q) * q_prime == sylow_order && n == q * q_prime &&
                                       rec.at("spec").at("n") == n;
                record(tag + "structure", structure, structure ? "" : "Sylow data inconsistent");
                sylow_orders.push_back(sylow_order);
                if (!structure) return;
                const SymbolAlgebraSpec spec = spec_from_json(rec.at("spec"));
                const json recomputed = run_checks(spec, q, q_prime);
                const json& stored = rec.at("checks");
                for (const auto& [name, result] : recomputed.items()) {
                    const bool passed = result.at("passed").get<bool>();
                    const bool same = stored.contains(name) && stored.at(name) == result;
                    record(tag + name, passed && same, !passed ? "recomputed check fails" : same ? "" : "stored result differs");
                }
                if (stored.size() != recomputed.size()) record(tag + "checks", false, "unexpected stored checks");
            });
        }
    });

    guarded("gcd_sylow_indices", [&] {
        const std::size_t order = c.at("order").get<std::size_t>();
        const std::size_t gcd = gcd_of_indices(sylow_orders, order);
        const json& global = c.at("global");
        json indices = json::array();
        for (std::size_t s : sylow_orders) indices.push_back(order / s);
        const bool ok = gcd == 1 && global.at("gcd_sylow_indices") == gcd && global.at("sylow_indices") == indices &&
                        global.at("passed") == true;
        record("gcd_sylow_indices", ok, ok ? "" : "recomputed gcd is " + std::to_string(gcd));
    });

    guarded("canonical_rebuild", [&] {
        const bool ok = build_witness(g).serialize() == cert.serialize();
        record("canonical_rebuild", ok, ok ? "" : "certificate differs from the canonical rebuild");
    });

    report.passed = !report.checks.empty();
    for (const auto& check : report.checks) report.passed = report.passed && check.passed;
    return report;
}

}  // namespace admissible
