#pragma once

// Ramification of symbol classes (a, b)_{zeta, n} at prime valuations via the
// tame symbol (-1)^(v(a) v(b)) a^v(b) b^-v(a) reduced into the residue field.

#include "admissible/symbol_algebra.hpp"
#include "admissible/valuations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace admissible {

struct RamificationDatum {
    PrimeSpec prime = PrimeSpec::t();
    UnivariateRational residue;
    FactoredUnivariate factored;
    int n = 1;
    int order = 1;  // order of the residue class modulo n-th powers; divides n

    /// {"prime": ..., "residue": ..., "order": ...}
    std::string to_json() const;
};

/// Throws ArithmeticError("tame symbol undefined") if the symbol is not a
/// unit at p.
RamificationDatum tame_symbol(const SymbolAlgebraSpec& spec, const PrimeSpec& p);

struct RamificationWitness {
    bool determined = false;
    std::optional<PrimeSpec> prime;  // first listed prime with order n
};

/// Period equals n only when the division criterion certifies the spec;
/// otherwise throws std::invalid_argument("period unknown for non-certified spec").
RamificationWitness determined_by_ramification(const SymbolAlgebraSpec& spec, const std::vector<PrimeSpec>& primes);

bool unramified_on_list(const SymbolAlgebraSpec& spec, const std::vector<PrimeSpec>& primes);

}  // namespace admissible
