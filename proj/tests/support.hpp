#pragma once

// Group corpus and brute-force oracles shared by the unit tests and the
// acceptance suite.  The oracles work from a Cayley table and never call the
// library's Sylow, rank or metacyclic code.

#include "admissible/group_theory.hpp"
#include "admissible/perm_group.hpp"
#include "admissible/permutation.hpp"
#include "admissible/valuations.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using admissible::Permutation;
using admissible::PermGroup;

struct CorpusGroup {
    std::string name;
    PermGroup group;
    std::size_t order;
    bool rank2;                 // expected rank-two verdict
    bool sylows_metacyclic;     // expected metacyclic verdict
};

inline PermGroup from_cycles(std::size_t degree, const std::vector<std::string>& gens) {
    std::vector<Permutation> ps;
    for (const auto& g : gens) ps.push_back(Permutation::parse_cycles(g, degree));
    return PermGroup(degree, ps);
}

// Q_8 = {+-1, +-i, +-j, +-k}; point 4*s + u stands for (-1)^s * unit u.
inline std::vector<std::uint32_t> quaternion_left_mult(int unit) {
    // unit products u*v = sign * w for u, v in {1, i, j, k}
    static const int w[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int s[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::uint32_t> images(8);
    for (int sign = 0; sign < 2; ++sign)
        for (int v = 0; v < 4; ++v)
            images[static_cast<std::size_t>(4 * sign + v)] = static_cast<std::uint32_t>(4 * ((sign + s[unit][v]) % 2) + w[unit][v]);
    return images;
}

inline PermGroup quaternion_group() {
    return PermGroup(8, {Permutation(quaternion_left_mult(1)), Permutation(quaternion_left_mult(2))});
}

// SL(2, 3) acting on the 8 nonzero vectors of F_3^2.
inline PermGroup sl23() {
    std::vector<std::array<int, 2>> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x || y) pts.push_back({x, y});
    auto act = [&](int a, int b, int c, int d) {
        std::vector<std::uint32_t> images;
        for (const auto& p : pts) {
            const std::array<int, 2> q{(a * p[0] + b * p[1]) % 3, (c * p[0] + d * p[1]) % 3};
            images.push_back(static_cast<std::uint32_t>(std::find(pts.begin(), pts.end(), q) - pts.begin()));
        }
        return Permutation(images);
    };
    return PermGroup(8, {act(1, 1, 0, 1), act(0, 2, 1, 0)});
}

inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const std::size_t da = a.degree(), db = b.degree();
    std::vector<Permutation> gens;
    for (const auto& g : a.generators()) {
        std::vector<std::uint32_t> im(da + db);
        for (std::size_t k = 0; k < da; ++k) im[k] = g(static_cast<std::uint32_t>(k));
        for (std::size_t k = 0; k < db; ++k) im[da + k] = static_cast<std::uint32_t>(da + k);
        gens.emplace_back(im);
    }
    for (const auto& g : b.generators()) {
        std::vector<std::uint32_t> im(da + db);
        for (std::size_t k = 0; k < da; ++k) im[k] = static_cast<std::uint32_t>(k);
        for (std::size_t k = 0; k < db; ++k) im[da + k] = static_cast<std::uint32_t>(da + g(static_cast<std::uint32_t>(k)));
        gens.emplace_back(im);
    }
    return PermGroup(da + db, gens);
}

// Dic3 = <a, x | a^6 = 1, x^2 = a^3, x a x^-1 = a^-1>; point 6*e + k is a^k x^e.
inline PermGroup dicyclic12() {
    auto index = [](int k, int e) { return static_cast<std::uint32_t>(6 * e + ((k % 6) + 6) % 6); };
    std::vector<std::uint32_t> left_a(12), left_x(12);
    for (int e = 0; e < 2; ++e) {
        for (int k = 0; k < 6; ++k) {
            left_a[index(k, e)] = index(k + 1, e);
            // x a^k = a^-k x, and x x = a^3
            left_x[index(k, e)] = e == 0 ? index(-k, 1) : index(-k + 3, 0);
        }
    }
    return PermGroup(12, {Permutation(left_a), Permutation(left_x)});
}

inline std::vector<CorpusGroup> group_corpus() {
    const PermGroup q8 = quaternion_group();
    return {
        {"trivial", PermGroup(1), 1, true, true},
        {"C6", from_cycles(6, {"(0 1 2 3 4 5)"}), 6, true, true},
        {"S3", from_cycles(3, {"(0 1)", "(0 1 2)"}), 6, true, true},
        {"A4", from_cycles(4, {"(0 1 2)", "(0 1)(2 3)"}), 12, true, true},
        {"D4", from_cycles(4, {"(0 1 2 3)", "(0 2)"}), 8, false, true},
        {"Q8", q8, 8, false, true},
        {"SL(2,3)", sl23(), 24, false, true},
        {"(Z/2)^3", from_cycles(6, {"(0 1)", "(2 3)", "(4 5)"}), 8, false, false},
        {"Z/4 x Z/2", from_cycles(6, {"(0 1 2 3)", "(4 5)"}), 8, true, true},
        {"(Z/3)^2", from_cycles(6, {"(0 1 2)", "(3 4 5)"}), 9, true, true},
        {"C30", from_cycles(10, {"(0 1)(2 3 4)(5 6 7 8 9)"}), 30, true, true},
        {"S4", from_cycles(4, {"(0 1 2 3)", "(0 1)"}), 24, false, true},
        {"A5", from_cycles(5, {"(0 1 2 3 4)", "(0 1 2)"}), 60, true, true},
        {"D5", from_cycles(5, {"(0 1 2 3 4)", "(1 4)(2 3)"}), 10, true, true},
        {"F20", from_cycles(5, {"(0 1 2 3 4)", "(1 2 4 3)"}), 20, true, true},
        {"Dic3", dicyclic12(), 12, true, true},
        {"(Z/3)^2 x C2", from_cycles(8, {"(0 1 2)", "(3 4 5)", "(6 7)"}), 18, true, true},
        {"C12", from_cycles(7, {"(0 1 2 3)(4 5 6)"}), 12, true, true},
        {"D6", from_cycles(6, {"(0 1 2 3 4 5)", "(1 5)(2 4)"}), 12, true, true},
        {"Q8 x C3", direct_product(q8, from_cycles(3, {"(0 1 2)"})), 24, false, true},
        {"C4 x C4", from_cycles(8, {"(0 1 2 3)", "(4 5 6 7)"}), 16, true, true},
    };
}

/// Cayley table oracle over the enumerated elements.
class CayleyTable {
  public:
    explicit CayleyTable(const PermGroup& g) : elems_(g.elements()) {
        const std::size_t n = elems_.size();
        std::map<Permutation, std::size_t> index;
        for (std::size_t k = 0; k < n; ++k) index[elems_[k]] = k;
        mul_.assign(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = index.at(elems_[a] * elems_[b]);
        for (std::size_t a = 0; a < n; ++a)
            if (elems_[a].is_identity()) identity_ = a;
    }

    std::size_t size() const { return elems_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * elems_.size() + b]; }
    std::size_t identity() const { return identity_; }
    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
        return k;
    }
    std::size_t power(std::size_t a, std::size_t k) const {
        std::size_t x = identity_;
        while (k--) x = mul(x, a);
        return x;
    }

    using Subset = std::vector<bool>;

    Subset closure(Subset s) const {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k]) members.push_back(k);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                for (std::size_t c : {mul(members[i], members[j]), mul(members[j], members[i])}) {
                    if (!s[c]) {
                        s[c] = true;
                        members.push_back(c);
                    }
                }
            }
        }
        s[identity_] = true;
        return s;
    }

    /// Every subgroup, found by adjoining elements to known subgroups.
    std::vector<Subset> all_subgroups() const {
        const std::size_t n = size();
        Subset trivial(n, false);
        trivial[identity_] = true;
        std::set<Subset> seen{trivial};
        std::vector<Subset> queue{trivial};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (std::size_t x = 0; x < n; ++x) {
                if (queue[i][x]) continue;
                Subset next = queue[i];
                next[x] = true;
                next = closure(std::move(next));
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        return queue;
    }

  private:
    std::vector<Permutation> elems_;
    std::vector<std::size_t> mul_;
    std::size_t identity_ = 0;
};

inline std::vector<std::size_t> members(const CayleyTable::Subset& s) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k]) out.push_back(k);
    return out;
}

inline bool oracle_abelian(const CayleyTable& t, const CayleyTable::Subset& s) {
    const auto m = members(s);
    for (std::size_t a : m)
        for (std::size_t b : m)
            if (t.mul(a, b) != t.mul(b, a)) return false;
    return true;
}

/// log_p of the number of elements with x^p = 1.
inline int oracle_rank(const CayleyTable& t, const CayleyTable::Subset& s, unsigned p) {
    std::size_t count = 0;
    for (std::size_t a : members(s))
        if (t.power(a, p) == t.identity()) ++count;
    int r = 0;
    while (count > 1) {
        count /= p;
        ++r;
    }
    return r;
}

/// Some cyclic normal subgroup N of S (listed among all subgroups) has S/N cyclic.
inline bool oracle_metacyclic(const CayleyTable& t, const CayleyTable::Subset& s, const std::vector<CayleyTable::Subset>& subgroups) {
    const auto ms = members(s);
    for (const auto& n : subgroups) {
        const auto mn = members(n);
        bool inside = true;
        for (std::size_t x : mn) inside = inside && s[x];
        if (!inside) continue;
        bool cyclic = false;
        for (std::size_t x : mn) cyclic = cyclic || t.element_order(x) == mn.size();
        if (!cyclic) continue;
        bool normal = true;
        for (std::size_t g : ms) {
            std::size_t g_inv = t.identity();
            for (std::size_t h : ms)
                if (t.mul(g, h) == t.identity()) g_inv = h;
            for (std::size_t x : mn) normal = normal && n[t.mul(t.mul(g, x), g_inv)];
            if (!normal) break;
        }
        if (!normal) continue;
        const std::size_t quotient = ms.size() / mn.size();
        for (std::size_t g : ms) {
            std::size_t k = 1;
            for (std::size_t y = g; !n[y]; y = t.mul(y, g)) ++k;
            if (k == quotient) return true;
        }
    }
    return false;
}

struct OracleVerdict {
    bool rank2 = true;
    bool sylows_metacyclic = true;
    bool group_metacyclic = false;
};

inline std::size_t p_part(std::size_t n, std::size_t p) {
    std::size_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

/// Tests EVERY subgroup of full p-power order, not just one Sylow subgroup.
inline OracleVerdict oracle_verdict(const PermGroup& g) {
    const CayleyTable t(g);
    const auto subgroups = t.all_subgroups();
    OracleVerdict out;
    CayleyTable::Subset whole(t.size(), true);
    out.group_metacyclic = oracle_metacyclic(t, whole, subgroups);
    std::size_t n = t.size();
    for (std::size_t p = 2; p <= n; ++p) {
        if (n % p) continue;
        bool prime = true;
        for (std::size_t d = 2; d * d <= p; ++d) prime = prime && p % d;
        if (!prime) continue;
        const std::size_t target = p_part(t.size(), p);
        for (const auto& s : subgroups) {
            if (members(s).size() != target) continue;
            const bool ok = oracle_abelian(t, s) && oracle_rank(t, s, static_cast<unsigned>(p)) <= 2;
            out.rank2 = out.rank2 && ok;
            out.sylows_metacyclic = out.sylows_metacyclic && oracle_metacyclic(t, s, subgroups);
        }
    }
    return out;
}

/// Phi_m from the Moebius product prod_{d | m} (x^d - 1)^mu(m/d), integer coefficients low to high.
inline std::vector<long long> moebius_cyclotomic(unsigned m) {
    auto mu = [](unsigned k) {
        int sign = 1;
        for (unsigned p = 2; p * p <= k; ++p) {
            if (k % p) continue;
            k /= p;
            if (k % p == 0) return 0;
            sign = -sign;
        }
        return k > 1 ? -sign : sign;
    };
    auto times = [](const std::vector<long long>& a, unsigned d) {  // a * (x^d - 1)
        std::vector<long long> r(a.size() + d, 0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            r[k + d] += a[k];
            r[k] -= a[k];
        }
        return r;
    };
    std::vector<long long> num{1}, den{1};
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        const int s = mu(m / d);
        if (s == 1) num = times(num, d);
        if (s == -1) den = times(den, d);
    }
    // den is monic up to sign (-1)^k; long division.
    const long long lead = den.back();
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const long long c = num[k + den.size() - 1] / lead;
        quot[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return quot;
}

// Closure of {va, vb} in (Z/n)^2 by breadth-first search.
inline std::size_t oracle_subgroup_order(admissible::RankTwoValue va, admissible::RankTwoValue vb, int n) {
    const auto mod = [n](long x) { return static_cast<int>(((x % n) + n) % n); };
    std::set<std::pair<int, int>> seen{{0, 0}};
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<int, int>> next;
        for (const auto& [x, y] : frontier)
            for (const auto& v : {va, vb}) {
                const std::pair<int, int> s{mod(x + v.w), mod(y + v.u)};
                if (seen.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace testing_support
