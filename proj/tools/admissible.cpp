// Command line front end: group verdicts, witness certificates and their
// verification, symbol-algebra diagnostics, and metacyclic descriptors.

#include "admissible/expression.hpp"
#include "admissible/group_theory.hpp"
#include "admissible/ramification.hpp"
#include "admissible/witness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace admissible;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitNotAdmissible = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json prime_report_json(const PrimeReport& r) {
    json j{{"p", r.p},
           {"exponent", r.exponent},
           {"sylow_order", r.sylow.order},
           {"abelian", r.sylow.is_abelian},
           {"excluded", r.excluded},
           {"passes", r.passes}};
    j["rank"] = r.sylow.rank ? json(*r.sylow.rank) : json(nullptr);
    j["invariants"] = r.sylow.invariants ? json{r.sylow.invariants->first, r.sylow.invariants->second} : json(nullptr);
    if (r.metacyclic)
        j["metacyclic_witness"] = {{"normal_generator", r.metacyclic->normal_generator.to_cycles()},
                                   {"quotient_generator", r.metacyclic->quotient_generator.to_cycles()},
                                   {"normal_order", r.metacyclic->normal_order}};
    return j;
}

int check_group(const std::string& input, const std::string& mode, std::optional<unsigned> exclude, bool as_json) {
    const PermGroup g = parse_group(read_file(input));
    if (mode != "rank2" && mode != "metacyclic") throw std::invalid_argument("mode must be rank2 or metacyclic");
    const Verdict v = admissibility_verdict(g, mode == "rank2" ? VerdictMode::Rank2 : VerdictMode::Metacyclic, exclude);
    if (as_json) {
        json primes = json::array();
        for (const auto& r : v.primes) primes.push_back(prime_report_json(r));
        std::cout << json{{"mode", mode}, {"order", v.order}, {"admissible", v.admissible}, {"primes", primes}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "order " << v.order << ", mode " << mode << ": " << (v.admissible ? "admissible" : "not admissible") << "\n";
    for (const auto& r : v.primes) {
        std::cout << "  p = " << r.p << ": Sylow order " << r.sylow.order << ", "
                  << (r.sylow.is_abelian ? "abelian of rank " + std::to_string(*r.sylow.rank) : std::string("non-abelian"));
        if (r.sylow.invariants) std::cout << ", C" << r.sylow.invariants->first << " x C" << r.sylow.invariants->second;
        if (mode == "metacyclic" && !r.excluded) std::cout << (r.metacyclic ? ", metacyclic" : ", not metacyclic");
        std::cout << (r.excluded ? " [excluded]" : r.passes ? " [pass]" : " [fail]") << "\n";
    }
    return 0;
}

int witness(const std::string& input, const std::string& out, bool as_json) {
    const PermGroup g = parse_group(read_file(input));
    WitnessCertificate cert;
    try {
        cert = build_witness(g);
    } catch (const NotAdmissible& e) {
        if (as_json)
            std::cout << json{{"admissible", false}, {"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << e.what() << "\n";
        return kExitNotAdmissible;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << cert.serialize();
    if (as_json)
        std::cout << json{{"admissible", true}, {"certificate", out}, {"primes", cert.data["primes"].size()}}.dump(2) << "\n";
    else
        std::cout << "certificate for a group of order " << cert.data["order"] << " written to " << out << "\n";
    return 0;
}

int verify(const std::string& cert_path, const std::string& input, bool as_json) {
    const VerificationReport r = verify_certificate(read_file(cert_path), read_file(input));
    if (as_json) {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        for (const auto& c : r.checks)
            std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        std::cout << (r.passed ? "certificate verified" : "certificate rejected") << "\n";
    }
    return r.passed ? 0 : kExitVerifyFailed;
}

int symbol(int n, const std::string& a_text, const std::string& b_text, const std::vector<std::string>& prime_texts,
           bool as_json) {
    const unsigned order = static_cast<unsigned>(n);
    const SymbolAlgebraSpec spec = SymbolAlgebraSpec::standard(n, parse_rational_function(a_text, order),
                                                               parse_rational_function(b_text, order));
    std::vector<PrimeSpec> primes;
    for (const auto& p : prime_texts) primes.push_back(PrimeSpec::parse(p, order));
    if (primes.empty()) primes = standard_primes();

    const DivisionCriterion d = division_value_criterion(spec);
    json out{{"n", n},
             {"a", spec.a.to_string()},
             {"b", spec.b.to_string()},
             {"division", d.division},
             {"value_a", {d.value_a.w, d.value_a.u}},
             {"value_b", {d.value_b.w, d.value_b.u}},
             {"determinant", d.determinant}};
    json rows = json::array();
    for (const auto& p : primes) {
        json row{{"prime", p.to_string()}, {"v_a", prime_valuation(spec.a, p)}, {"v_b", prime_valuation(spec.b, p)}};
        try {
            const RamificationDatum t = tame_symbol(spec, p);
            row["residue"] = t.residue.to_string();
            row["order"] = t.order;
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }
        rows.push_back(std::move(row));
    }
    out["primes"] = rows;
    if (d.division) {
        const RamificationWitness w = determined_by_ramification(spec, primes);
        out["determined_by_ramification"] = w.determined;
        out["witness_prime"] = w.prime ? json(w.prime->to_string()) : json(nullptr);
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "(" << spec.a.to_string() << ", " << spec.b.to_string() << ")_" << n << "\n";
    std::cout << "  v(a) = (" << d.value_a.w << ", " << d.value_a.u << "), v(b) = (" << d.value_b.w << ", " << d.value_b.u
              << "), det = " << d.determinant << ": " << (d.division ? "division algebra" : "not certified") << "\n";
    for (const auto& row : rows) {
        std::cout << "  " << row["prime"].get<std::string>() << ": v_a = " << row["v_a"] << ", v_b = " << row["v_b"];
        if (row.contains("error"))
            std::cout << ", " << row["error"].get<std::string>() << "\n";
        else
            std::cout << ", residue " << row["residue"].get<std::string>() << " of order " << row["order"] << "\n";
    }
    if (d.division)
        std::cout << "  determined by ramification: "
                  << (out["determined_by_ramification"].get<bool>() ? "yes, at " + out["witness_prime"].get<std::string>()
                                                                    : std::string("no"))
                  << "\n";
    return 0;
}

int descriptor(int e, int m, int i, bool as_json) {
    const DescriptorGroup d = metacyclic_descriptor_group({e, m, i});
    if (as_json) {
        std::cout << json{{"e", e},
                          {"m", m},
                          {"i", i},
                          {"order", d.group.order()},
                          {"group", json::parse(d.group.to_json())},
                          {"abelian", d.abelian_by_generators},
                          {"abelian_by_exponent", d.abelian_by_exponent}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "C" << e << " x| C" << m << " with i = " << i << ": order " << d.group.order() << " on " << d.group.degree()
              << " points\n";
    std::cout << "  sigma = " << d.sigma.to_cycles() << "\n  tau = " << d.tau.to_cycles() << "\n";
    std::cout << "  " << (d.abelian_by_generators ? "abelian" : "non-abelian") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Admissibility of finite groups and witness division algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string input, out, cert, mode = "rank2";
    std::optional<unsigned> exclude;

    auto* check_cmd = app.add_subcommand("check-group", "Admissibility verdict and per-prime Sylow report");
    check_cmd->add_option("--input", input, "Group file (JSON or text form)")->required();
    check_cmd->add_option("--mode", mode, "rank2 or metacyclic")->check(CLI::IsMember({"rank2", "metacyclic"}));
    check_cmd->add_option("--exclude-prime", exclude, "Prime whose Sylow subgroup is not tested");
    check_cmd->add_flag("--json", as_json, "JSON output");

    auto* witness_cmd = app.add_subcommand("witness", "Build a witness certificate");
    witness_cmd->add_option("--input", input, "Group file")->required();
    witness_cmd->add_option("--out", out, "Certificate output path")->required();
    witness_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "Re-verify a witness certificate");
    verify_cmd->add_option("--cert", cert, "Certificate file")->required();
    verify_cmd->add_option("--input", input, "Group file")->required();
    verify_cmd->add_flag("--json", as_json, "JSON output");

    int n = 2;
    std::string a_text, b_text;
    std::vector<std::string> prime_texts;
    auto* symbol_cmd = app.add_subcommand("symbol", "Division criterion and tame symbols of (a, b)_n");
    symbol_cmd->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 64));
    symbol_cmd->add_option("--a", a_text, "Expression in f, t, z")->required();
    symbol_cmd->add_option("--b", b_text, "Expression in f, t, z")->required();
    symbol_cmd->add_option("--prime", prime_texts, "Prime (t, f, or polynomial monic in f); repeatable");
    symbol_cmd->add_flag("--json", as_json, "JSON output");

    int e = 1, m = 1, i = 1;
    auto* descriptor_cmd = app.add_subcommand("descriptor", "Group C_e x| C_m with tau^-1 sigma tau = sigma^i");
    descriptor_cmd->add_option("--e", e, "Order of sigma")->required();
    descriptor_cmd->add_option("--m", m, "Order of tau")->required();
    descriptor_cmd->add_option("--i", i, "Exponent")->required();
    descriptor_cmd->add_flag("--json", as_json, "JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check_cmd) return check_group(input, mode, exclude, as_json);
        if (*witness_cmd) return witness(input, out, as_json);
        if (*verify_cmd) return verify(cert, input, as_json);
        if (*symbol_cmd) return symbol(n, a_text, b_text, prime_texts, as_json);
        if (*descriptor_cmd) return descriptor(e, m, i, as_json);
    } catch (const std::exception& ex) {
        if (as_json)
            std::cout << json{{"error", ex.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
