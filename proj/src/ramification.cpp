#include "admissible/ramification.hpp"

#include "json.hpp"

#include <stdexcept>

namespace admissible {

std::string RamificationDatum::to_json() const {
    return nlohmann::json{{"prime", prime.to_string()}, {"residue", residue.to_string()}, {"order", order}}.dump();
}

RamificationDatum tame_symbol(const SymbolAlgebraSpec& spec, const PrimeSpec& p) {
    spec.validate();
    const int va = prime_valuation(spec.a, p);
    const int vb = prime_valuation(spec.b, p);
    RationalFunction2 r = spec.a.pow(vb) * spec.b.pow(-va);
    if ((static_cast<long>(va) * vb) % 2 != 0) r = -r;
    if (prime_valuation(r, p) != 0) throw ArithmeticError("tame symbol undefined");

    RamificationDatum out;
    out.prime = p;
    out.n = spec.n;
    out.residue = residue(r, p);
    out.factored = FactoredUnivariate::from(out.residue, spec.zeta_order()).refined();
    out.order = power_class_order(out.factored, spec.n);
    return out;
}

RamificationWitness determined_by_ramification(const SymbolAlgebraSpec& spec, const std::vector<PrimeSpec>& primes) {
    if (!division_value_criterion(spec).division) throw std::invalid_argument("period unknown for non-certified spec");
    for (const auto& p : primes)
        if (tame_symbol(spec, p).order == spec.n) return {true, p};
    return {false, std::nullopt};
}

bool unramified_on_list(const SymbolAlgebraSpec& spec, const std::vector<PrimeSpec>& primes) {
    for (const auto& p : primes)
        if (tame_symbol(spec, p).order != 1) return false;
    return true;
}

}  // namespace admissible
