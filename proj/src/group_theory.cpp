#include "admissible/group_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace admissible {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k) out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

bool is_power_of(std::size_t n, unsigned p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

std::size_t p_part(std::size_t n, unsigned p) {
    std::size_t out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

}  // namespace

std::vector<Permutation> cyclic_subgroup(const Permutation& x) {
    std::vector<Permutation> out{Permutation(x.degree())};
    for (Permutation y = x; !y.is_identity(); y = y * x) out.push_back(y);
    return out;
}

AbelianRank abelian_rank(const PermGroup& p_group, unsigned p) {
    if (!p_group.is_abelian()) return {false, std::nullopt};
    const auto& elems = p_group.elements();
    std::size_t torsion = 0;
    for (const auto& x : elems)
        if (x.pow(p).is_identity()) ++torsion;
    int rank = 0;
    while (torsion > 1) {
        if (torsion % p) throw std::invalid_argument("abelian_rank: input is not a p-group");
        torsion /= p;
        ++rank;
    }
    return {true, rank};
}

AbelianDecomposition abelian_decompose(const PermGroup& p_group, unsigned p) {
    const AbelianRank ar = abelian_rank(p_group, p);
    if (!ar.is_abelian || *ar.rank > 2) throw std::invalid_argument("not rank <= 2 abelian");
    const auto& elems = p_group.elements();
    const std::size_t n = elems.size();
    AbelianDecomposition out{1, 1, p_group.identity(), p_group.identity()};
    for (const auto& x : elems) {
        const std::size_t k = x.order();
        if (k > out.q) {
            out.q = k;
            out.g = x;
        }
    }
    const auto gen_g = cyclic_subgroup(out.g);
    const std::set<Permutation> in_g(gen_g.begin(), gen_g.end());
    for (const auto& h : elems) {
        const std::size_t k = h.order();
        if (out.q * k != n) continue;
        bool trivial_meet = true;
        Permutation y = h;
        for (std::size_t i = 1; i < k && trivial_meet; ++i, y = y * h) trivial_meet = !in_g.contains(y);
        if (trivial_meet) {
            out.q_prime = k;
            out.h = h;
            return out;
        }
    }
    throw std::logic_error("abelian_decompose: no complement found");
}

SylowData sylow(const PermGroup& g, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("sylow: " + std::to_string(p) + " is not prime");
    const auto& elems = g.elements();
    const std::size_t target = p_part(elems.size(), p);
    std::vector<Permutation> gens;
    PermGroup current(g.degree());
    while (current.order() < target) {
        bool grown = false;
        for (const auto& x : elems) {
            if (current.contains(x) || !is_power_of(x.order(), p)) continue;
            const Permutation x_inv = x.inverse();
            bool normalizes = true;
            for (const auto& s : gens) {
                if (!current.contains(x * s * x_inv)) {
                    normalizes = false;
                    break;
                }
            }
            if (!normalizes) continue;
            gens.push_back(x);
            current = PermGroup(g.degree(), gens);
            grown = true;
            break;
        }
        if (!grown) throw std::logic_error("sylow: normalizer contains no new p-element");
    }
    SylowData out;
    out.p = p;
    out.order = current.order();
    const AbelianRank ar = abelian_rank(current, p);
    out.is_abelian = ar.is_abelian;
    out.rank = ar.rank;
    if (ar.is_abelian && *ar.rank <= 2) {
        const auto dec = abelian_decompose(current, p);
        out.invariants = std::make_pair(dec.q, dec.q_prime);
    }
    out.subgroup = std::move(current);
    return out;
}

std::optional<MetacyclicWitness> is_metacyclic(const PermGroup& g) {
    const auto& elems = g.elements();
    const std::size_t n = elems.size();
    std::set<std::vector<std::size_t>> seen;
    for (const auto& x : elems) {
        const auto cyc = cyclic_subgroup(x);
        std::vector<std::size_t> key;
        std::vector<bool> in_n(n, false);
        for (const auto& y : cyc) {
            const std::size_t idx = *g.index_of(y);
            key.push_back(idx);
            in_n[idx] = true;
        }
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;

        bool normal = true;
        for (const auto& s : g.generators()) {
            if (!in_n[*g.index_of(s * x * s.inverse())]) {
                normal = false;
                break;
            }
        }
        if (!normal) continue;

        const std::size_t quotient_order = n / cyc.size();
        for (const auto& y : elems) {
            std::size_t j = 1;
            Permutation power = y;
            while (!in_n[*g.index_of(power)]) {
                power = power * y;
                ++j;
            }
            if (j == quotient_order) return MetacyclicWitness{x, y, cyc.size()};
        }
    }
    return std::nullopt;
}

Verdict admissibility_verdict(const PermGroup& g, VerdictMode mode, std::optional<unsigned> excluded_prime) {
    Verdict out;
    out.mode = mode;
    out.order = g.order();
    out.admissible = true;
    for (const auto& [p, k] : factorize(out.order)) {
        PrimeReport report;
        report.p = static_cast<unsigned>(p);
        report.exponent = k;
        report.sylow = sylow(g, report.p);
        if (excluded_prime && *excluded_prime == p) {
            report.excluded = true;
            report.passes = true;
        } else if (mode == VerdictMode::Rank2) {
            report.passes = report.sylow.is_abelian && *report.sylow.rank <= 2;
        } else {
            report.metacyclic = is_metacyclic(report.sylow.subgroup);
            report.passes = report.metacyclic.has_value();
        }
        out.admissible = out.admissible && report.passes;
        out.primes.push_back(std::move(report));
    }
    return out;
}

void MetacyclicDescriptor::validate() const {
    if (e < 1 || m < 1) throw std::invalid_argument("descriptor: e and m must be positive");
    if (i < 1 || i >= std::max(e, 2)) throw std::invalid_argument("descriptor: need 1 <= i < e");
    if (std::gcd(i, e) != 1) throw std::invalid_argument("descriptor: gcd(i, e) must be 1");
    long power = 1;
    for (int k = 0; k < m; ++k) power = power * i % e;
    if (power != 1 % e) throw std::invalid_argument("descriptor: i^m must be 1 mod e");
}

DescriptorGroup metacyclic_descriptor_group(const MetacyclicDescriptor& d) {
    d.validate();
    const int e = d.e, m = d.m;
    int i_inv = 0;
    for (int k = 0; k < e; ++k)
        if (static_cast<long>(k) * d.i % e == 1 % e) {
            i_inv = k;
            break;
        }
    // Point c + e*d stands for sigma^c tau^d; the generators act by left
    // multiplication using (sigma^a tau^b)(sigma^c tau^d) = sigma^(a + c i^-b) tau^(b+d).
    const std::size_t points = static_cast<std::size_t>(e) * m;
    std::vector<std::uint32_t> sig(points), ta(points);
    for (int c = 0; c < e; ++c) {
        for (int k = 0; k < m; ++k) {
            const std::size_t here = c + static_cast<std::size_t>(e) * k;
            sig[here] = static_cast<std::uint32_t>((c + 1) % e + static_cast<std::size_t>(e) * k);
            ta[here] = static_cast<std::uint32_t>(static_cast<long>(c) * i_inv % e + static_cast<std::size_t>(e) * ((k + 1) % m));
        }
    }
    DescriptorGroup out;
    out.sigma = Permutation(std::move(sig));
    out.tau = Permutation(std::move(ta));
    out.group = PermGroup(points, {out.sigma, out.tau});
    if (out.group.order() != points) throw std::logic_error("descriptor group has wrong order");
    if (!(out.tau.inverse() * out.sigma * out.tau == out.sigma.pow(d.i)))
        throw std::logic_error("descriptor group violates tau^-1 sigma tau = sigma^i");
    out.abelian_by_generators = out.sigma * out.tau == out.tau * out.sigma;
    out.abelian_by_exponent = d.i % e == 1 % e;
    return out;
}

}  // namespace admissible
