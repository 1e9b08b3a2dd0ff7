/*
   Copyright 2026 The hlg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Test-only reference implementations. Nothing here calls into the library's
// arithmetic; conversions at the boundary only read exponents and coefficients.

#ifndef HLG_TEST_ORACLES_HPP
#define HLG_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hlg/mpoly.hpp"

namespace oracle {

inline std::uint64_t inverse_by_search(std::uint64_t a, std::uint64_t p) {
    for (std::uint64_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    return 0;
}

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Dense-keyed naive polynomial: exponent vector -> coefficient, schoolbook
/// arithmetic, substitution without caching.
struct NaivePoly {
    unsigned nvars = 0;
    std::uint64_t p = 2;
    std::map<std::vector<unsigned>, std::uint64_t> terms;

    static NaivePoly constant(unsigned n, std::uint64_t p, std::uint64_t c) {
        NaivePoly f{n, p, {}};
        if (c % p) f.terms[std::vector<unsigned>(n, 0)] = c % p;
        return f;
    }
    static NaivePoly var(unsigned n, std::uint64_t p, unsigned i) {
        NaivePoly f{n, p, {}};
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        f.terms[e] = 1;
        return f;
    }

    void add_term(const std::vector<unsigned>& e, std::uint64_t c) {
        auto& slot = terms[e];
        slot = (slot + c) % p;
        if (slot == 0) terms.erase(e);
    }

    NaivePoly operator+(const NaivePoly& g) const {
        NaivePoly r = *this;
        for (const auto& [e, c] : g.terms) r.add_term(e, c);
        return r;
    }
    NaivePoly operator-(const NaivePoly& g) const {
        NaivePoly r = *this;
        for (const auto& [e, c] : g.terms) r.add_term(e, (p - c) % p);
        return r;
    }
    NaivePoly operator*(const NaivePoly& g) const {
        NaivePoly r{nvars, p, {}};
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : g.terms) {
                std::vector<unsigned> e(nvars);
                for (unsigned i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, static_cast<std::uint64_t>((static_cast<unsigned __int128>(c1) * c2) % p));
            }
        return r;
    }

    std::uint64_t eval(const std::vector<std::uint64_t>& x) const {
        std::uint64_t acc = 0;
        for (const auto& [e, c] : terms) {
            unsigned __int128 v = c;
            for (unsigned i = 0; i < nvars; ++i)
                for (unsigned k = 0; k < e[i]; ++k) v = (v * x[i]) % p;
            acc = (acc + static_cast<std::uint64_t>(v)) % p;
        }
        return acc;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }

    /// f(inner_0, ..., inner_{nvars-1}) by term-by-term substitution.
    NaivePoly substitute(const std::vector<NaivePoly>& inner) const {
        const unsigned m = inner.front().nvars;
        NaivePoly r{m, p, {}};
        for (const auto& [e, c] : terms) {
            NaivePoly t = constant(m, p, c);
            for (unsigned i = 0; i < nvars; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * inner[i];
            r = r + t;
        }
        return r;
    }

    static NaivePoly from(const hlg::SparsePoly& f) {
        NaivePoly r{f.nvars(), f.modulus(), {}};
        for (const auto& t : f.terms()) r.add_term(t.mono.exponents(f.nvars()), t.coeff);
        return r;
    }
    bool same_as(const hlg::SparsePoly& f) const {
        const NaivePoly g = from(f);
        return g.nvars == nvars && g.p == p && g.terms == terms;
    }
};

inline std::vector<NaivePoly> from_map(const hlg::PolyMap& m) {
    std::vector<NaivePoly> r;
    for (const auto& c : m.components()) r.push_back(NaivePoly::from(c));
    return r;
}

/// Literal polynomial from a coefficient table keyed by exponent vectors.
inline NaivePoly literal(unsigned n, std::uint64_t p, std::initializer_list<std::pair<std::vector<unsigned>, std::int64_t>> ts) {
    NaivePoly f{n, p, {}};
    for (const auto& [e, c] : ts) {
        const auto m = static_cast<std::int64_t>(p);
        f.add_term(e, static_cast<std::uint64_t>(((c % m) + m) % m));
    }
    return f;
}

/// Exhaustive count of distinct (immersion coefficients, triangular map) pairs
/// at n = 2, d = 1, compared as function tables over GF(p).
inline std::uint64_t enumerate_pairs_n2_d1(std::uint64_t p) {
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t a0 = 0; a0 < p; ++a0)
        for (std::uint64_t a1 = 0; a1 < p; ++a1)
            for (std::uint64_t b0 = 0; b0 < p; ++b0)
                for (std::uint64_t b1 = 0; b1 < p; ++b1)
                    // tau = (x1 + c, x2 + e + f x1)
                    for (std::uint64_t c = 0; c < p; ++c)
                        for (std::uint64_t e = 0; e < p; ++e)
                            for (std::uint64_t f = 0; f < p; ++f) {
                                std::vector<std::uint64_t> key;
                                for (std::uint64_t t = 0; t < p; ++t) {
                                    key.push_back((b0 + t * a0) % p);
                                    key.push_back((b1 + t * a1) % p);
                                }
                                for (std::uint64_t x1 = 0; x1 < p; ++x1)
                                    for (std::uint64_t x2 = 0; x2 < p; ++x2) {
                                        key.push_back((x1 + c) % p);
                                        key.push_back((x2 + e + f * x1) % p);
                                    }
                                seen.insert(key);
                            }
    return seen.size();
}

}  // namespace oracle

#endif  // HLG_TEST_ORACLES_HPP
