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

#ifndef HLG_AUTOS_HPP
#define HLG_AUTOS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "mpoly.hpp"
#include "rng.hpp"

namespace hlg {

/// Which linear part is applied to the input first.
///   Lambda2First: theta(x) = lambda1(tau(lambda2(x)))
///   Lambda1First: theta(x) = lambda2(tau(lambda1(x)))
enum class Convention { Lambda2First, Lambda1First };

constexpr std::string_view to_string(Convention c) {
    return c == Convention::Lambda2First ? "lambda2-first" : "lambda1-first";
}

inline Convention parse_convention(std::string_view s) {
    if (s == "lambda2-first") return Convention::Lambda2First;
    if (s == "lambda1-first") return Convention::Lambda1First;
    throw Error(ErrorKind::InvalidInput, "unknown convention '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// AffineLinearMap
// ---------------------------------------------------------------------------

/// x -> M x + b with M invertible.
class AffineLinearMap {
public:
    AffineLinearMap() = default;
    AffineLinearMap(FieldMatrix linear, FieldVector offset)
        : linear_(std::move(linear)), offset_(std::move(offset)), inverse_(mat_invert(linear_)) {
        require_same_modulus(linear_.modulus(), offset_.modulus());
        if (offset_.size() != linear_.rows()) throw Error(ErrorKind::ArityMismatch, "offset length must equal dimension");
    }
    explicit AffineLinearMap(FieldMatrix linear)
        : AffineLinearMap(linear, FieldVector(linear.modulus(), linear.rows())) {}

    static AffineLinearMap identity(unsigned n, std::uint64_t p) {
        return AffineLinearMap(FieldMatrix::identity(p, n));
    }

    const FieldMatrix& linear() const noexcept { return linear_; }
    const FieldVector& offset() const noexcept { return offset_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(linear_.rows()); }
    std::uint64_t modulus() const noexcept { return linear_.modulus(); }

    FieldVector apply(const FieldVector& x) const { return linear_ * x + offset_; }

    AffineLinearMap inverse() const {
        const FieldVector shift = inverse_ * offset_;
        return AffineLinearMap(inverse_, FieldVector(modulus(), dim()) - shift);
    }

    PolyMap as_map() const { return PolyMap::affine(linear_, offset_); }

    friend bool operator==(const AffineLinearMap& a, const AffineLinearMap& b) {
        return a.linear_ == b.linear_ && a.offset_ == b.offset_;
    }

private:
    FieldMatrix linear_;
    FieldVector offset_;
    FieldMatrix inverse_;
};

// ---------------------------------------------------------------------------
// TriangularMap
// ---------------------------------------------------------------------------

/// x -> (x_1 + s_1, x_2 + s_2(x_1), ..., x_n + s_n(x_1..x_{n-1})).
/// Each shift is stored as a polynomial in all n variables but may only use
/// variables of lower index.
class TriangularMap {
public:
    TriangularMap() = default;
    TriangularMap(std::vector<SparsePoly> shifts, unsigned degree_bound)
        : shifts_(std::move(shifts)), d_(degree_bound) {
        if (shifts_.empty()) throw Error(ErrorKind::InvalidInput, "triangular map needs at least one coordinate");
        const auto n = static_cast<unsigned>(shifts_.size());
        const std::uint64_t p = shifts_.front().modulus();
        for (unsigned i = 0; i < n; ++i) {
            const auto& s = shifts_[i];
            require_same_modulus(p, s.modulus());
            if (s.nvars() != n) throw Error(ErrorKind::ArityMismatch, "shift polynomials must live in n variables");
            for (const auto& t : s.terms())
                if (t.mono.support_end() > i)
                    throw Error(ErrorKind::InvalidInput, "shift " + std::to_string(i + 1) + " uses a variable of index >= its own");
            if (s.total_degree() > static_cast<int>(d_))
                throw Error(ErrorKind::InvalidInput, "shift " + std::to_string(i + 1) + " exceeds the degree bound");
        }
    }

    static TriangularMap identity(unsigned n, std::uint64_t p, unsigned d = 0) {
        return TriangularMap(std::vector<SparsePoly>(n, SparsePoly::zero(n, p)), d);
    }

    unsigned dim() const noexcept { return static_cast<unsigned>(shifts_.size()); }
    unsigned degree_bound() const noexcept { return d_; }
    std::uint64_t modulus() const noexcept { return shifts_.front().modulus(); }
    const std::vector<SparsePoly>& shifts() const noexcept { return shifts_; }

    PolyMap as_map() const {
        const unsigned n = dim();
        std::vector<SparsePoly> c;
        for (unsigned i = 0; i < n; ++i) c.push_back(SparsePoly::variable(n, modulus(), i) + shifts_[i]);
        return PolyMap(n, modulus(), std::move(c));
    }

    friend bool operator==(const TriangularMap&, const TriangularMap&) = default;

private:
    std::vector<SparsePoly> shifts_;
    unsigned d_ = 0;
};

/// Back-substitution inverse: g_1 = y_1 - s_1, g_i = y_i - s_i(g_1, ..., g_{i-1}).
inline PolyMap tri_invert(const TriangularMap& tau) {
    const unsigned n = tau.dim();
    const std::uint64_t p = tau.modulus();
    std::vector<SparsePoly> g;
    g.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        // Inputs of index >= i never occur in shift i; pad them with the bare variables.
        std::vector<SparsePoly> inner = g;
        for (unsigned k = i; k < n; ++k) inner.push_back(SparsePoly::variable(n, p, k));
        const SparsePoly s = compose(tau.shifts()[i], PolyMap(n, p, std::move(inner)));
        g.push_back(SparsePoly::variable(n, p, i) - s);
    }
    return PolyMap(n, p, std::move(g));
}

// ---------------------------------------------------------------------------
// TameAutomorphism
// ---------------------------------------------------------------------------

class TameAutomorphism {
public:
    TameAutomorphism() = default;

    const AffineLinearMap& lambda1() const noexcept { return l1_; }
    const TriangularMap& tau() const noexcept { return tau_; }
    const AffineLinearMap& lambda2() const noexcept { return l2_; }
    Convention convention() const noexcept { return conv_; }
    const PolyMap& forward() const noexcept { return forward_; }
    const PolyMap& inverse() const noexcept { return inverse_; }
    unsigned dim() const noexcept { return tau_.dim(); }
    std::uint64_t modulus() const noexcept { return tau_.modulus(); }
    unsigned degree_bound() const noexcept { return tau_.degree_bound(); }

    friend TameAutomorphism tame_build(AffineLinearMap, TriangularMap, AffineLinearMap, Convention);

    friend bool operator==(const TameAutomorphism& a, const TameAutomorphism& b) {
        return a.l1_ == b.l1_ && a.tau_ == b.tau_ && a.l2_ == b.l2_ && a.conv_ == b.conv_;
    }

private:
    AffineLinearMap l1_;
    TriangularMap tau_;
    AffineLinearMap l2_;
    Convention conv_ = Convention::Lambda2First;
    PolyMap forward_;
    PolyMap inverse_;
};

/// Assembles lambda1 ∘ tau ∘ lambda2 (or the mirrored order) and caches both
/// directions as expanded polynomial maps.
inline TameAutomorphism tame_build(AffineLinearMap lambda1, TriangularMap tau, AffineLinearMap lambda2,
                                   Convention convention = Convention::Lambda2First) {
    const unsigned n = tau.dim();
    if (lambda1.dim() != n || lambda2.dim() != n) throw Error(ErrorKind::ArityMismatch, "linear parts must match the triangular dimension");
    require_same_modulus(lambda1.modulus(), tau.modulus());
    require_same_modulus(lambda2.modulus(), tau.modulus());

    const AffineLinearMap& first = convention == Convention::Lambda2First ? lambda2 : lambda1;
    const AffineLinearMap& last = convention == Convention::Lambda2First ? lambda1 : lambda2;

    TameAutomorphism t;
    t.forward_ = expand(last.as_map(), expand(tau.as_map(), first.as_map()));
    t.inverse_ = expand(first.inverse().as_map(), expand(tri_invert(tau), last.inverse().as_map()));
    t.l1_ = std::move(lambda1);
    t.tau_ = std::move(tau);
    t.l2_ = std::move(lambda2);
    t.conv_ = convention;
    return t;
}

/// Uniformly random invertible n x n matrix (rejection sampling).
inline FieldMatrix random_invertible(Rng& rng, std::uint64_t p, unsigned n) {
    for (;;) {
        FieldMatrix m(p, n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m(i, j) = rng.below(p);
        if (rank(m) == n) return m;
    }
}

/// All exponent vectors of total degree <= d in the first `k` of `n` variables,
/// in canonical order.
inline std::vector<Monomial> monomials_up_to(unsigned n, unsigned k, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
        if (var == k) {
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (unsigned x = 0; x <= left; ++x) {
            e[var] = x;
            self(self, var + 1, left - x);
        }
        e[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Seeded sample from the tame family. Every allowed monomial of every shift
/// is kept with probability `sparsity` and given a uniform nonzero coefficient.
inline TameAutomorphism tame_random(std::uint64_t p, unsigned d, unsigned n, std::uint64_t seed, double sparsity = 1.0,
                                    Convention convention = Convention::Lambda2First, bool affine_offsets = false) {
    checked_modulus(p);
    if (n < 2) throw Error(ErrorKind::InvalidInput, "tame_random needs n >= 2");
    if (d < 1) throw Error(ErrorKind::InvalidInput, "tame_random needs d >= 1");
    Rng rng(seed);
    auto offset = [&] {
        FieldVector b(p, n);
        if (affine_offsets)
            for (unsigned i = 0; i < n; ++i) b[i] = rng.below(p);
        return b;
    };
    AffineLinearMap l1(random_invertible(rng, p, n), offset());
    AffineLinearMap l2(random_invertible(rng, p, n), offset());
    std::vector<SparsePoly> shifts;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (const auto& m : monomials_up_to(n, i, d))
            if (rng.chance(sparsity)) terms.push_back({m, 1 + rng.below(p - 1)});
        shifts.push_back(SparsePoly::from_terms(n, p, std::move(terms)));
    }
    return tame_build(std::move(l1), TriangularMap(std::move(shifts), d), std::move(l2), convention);
}

// ---------------------------------------------------------------------------
// Key space accounting
// ---------------------------------------------------------------------------

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

struct KeyspaceReport {
    std::uint64_t p = 0;
    unsigned d = 0;
    unsigned n = 0;
    /// Coefficients in a triangular map: sum over i of C(d + i - 1, d).
    std::uint64_t triangular_count_exponent = 0;
    std::uint64_t immersion_count_exponent = 0;
    std::uint64_t lower_bound_exponent = 0;
    double entropy_bits_lower_bound = 0.0;
    /// Exponents as they appear in the published bound, for comparison.
    std::uint64_t published_triangular_exponent = 0;
    std::uint64_t published_bound_exponent = 0;
    std::string published_formula_note;
};

inline KeyspaceReport keyspace(std::uint64_t p, unsigned d, unsigned n) {
    KeyspaceReport r;
    r.p = p;
    r.d = d;
    r.n = n;
    std::uint64_t published_sum = 0;
    for (unsigned i = 1; i <= n; ++i) {
        r.triangular_count_exponent += binomial(d + i - 1, d);
        r.published_triangular_exponent += binomial(d + i, d);
        published_sum += d + i;
    }
    r.immersion_count_exponent = 2ULL * n;
    r.lower_bound_exponent = r.immersion_count_exponent + r.triangular_count_exponent;
    r.entropy_bits_lower_bound = static_cast<double>(r.lower_bound_exponent) * std::log2(static_cast<double>(p));
    r.published_bound_exponent = binomial(2ULL * n + published_sum, d);
    r.published_formula_note =
        "The published bound reads p^C(2n + sum_i (d+i), d), with triangular exponent sum_i C(d+i, d). "
        "Shift i is a polynomial of degree <= d in the i-1 lower variables, so it has C(d+i-1, d) "
        "coefficients; this report uses 2n + sum_i C(d+i-1, d). The published entropy bound "
        "log(p) p^(...) is read as exponent * log2(p) bits.";
    return r;
}

struct KeyspaceEnumeration {
    /// Distinct (immersion coefficients (a, b), triangular map) pairs, a unrestricted.
    std::uint64_t pairs = 0;
    /// Same, restricted to a != 0 (genuine immersions).
    std::uint64_t immersion_pairs = 0;
    /// Distinct group structures (labelled point sets with their addition)
    /// produced by the genuine immersion pairs with theta = tau.
    std::uint64_t group_structures = 0;
};

/// Exhaustive enumeration at tiny sizes. Pairs are compared as functions on
/// F-points; group structures are compared through the parametrization
/// t -> tau(b + t a) up to the additive automorphisms t -> c t.
inline KeyspaceEnumeration enumerate_keyspace(std::uint64_t p, unsigned d, unsigned n) {
    checked_modulus(p);
    std::uint64_t points = 1;
    for (unsigned i = 0; i < n; ++i) points *= p;
    std::vector<std::vector<Monomial>> allowed(n);
    std::uint64_t tri_total = 1, coeffs = 0;
    for (unsigned i = 0; i < n; ++i) {
        allowed[i] = monomials_up_to(n, i, d);
        coeffs += allowed[i].size();
    }
    for (std::uint64_t c = 0; c < coeffs; ++c) {
        tri_total *= p;
        if (tri_total > 1'000'000) throw Error(ErrorKind::InvalidInput, "key space too large to enumerate");
    }
    if (points * points > 1'000'000) throw Error(ErrorKind::InvalidInput, "key space too large to enumerate");

    auto point = [&](std::uint64_t idx) {
        FieldVector v(p, n);
        for (unsigned i = 0; i < n; ++i) {
            v[i] = idx % p;
            idx /= p;
        }
        return v;
    };

    // Function tables of every triangular map.
    std::vector<PolyMap> taus;
    for (std::uint64_t code = 0; code < tri_total; ++code) {
        std::uint64_t c = code;
        std::vector<SparsePoly> shifts;
        for (unsigned i = 0; i < n; ++i) {
            std::vector<Term> terms;
            for (const auto& m : allowed[i]) {
                terms.push_back({m, c % p});
                c /= p;
            }
            shifts.push_back(SparsePoly::from_terms(n, p, std::move(terms)));
        }
        taus.push_back(TriangularMap(std::move(shifts), d).as_map());
    }

    std::set<std::vector<Residue>> pair_keys, immersion_keys, group_keys;
    for (std::uint64_t ai = 0; ai < points; ++ai) {
        const FieldVector a = point(ai);
        for (std::uint64_t bi = 0; bi < points; ++bi) {
            const FieldVector b = point(bi);
            for (const auto& tau : taus) {
                std::vector<Residue> key;
                for (std::uint64_t t = 0; t < p; ++t) {
                    const FieldVector x = b + t * a;
                    key.insert(key.end(), x.raw().begin(), x.raw().end());
                }
                for (std::uint64_t xi = 0; xi < points; ++xi) {
                    const FieldVector y = tau.evaluate(point(xi));
                    key.insert(key.end(), y.raw().begin(), y.raw().end());
                }
                if (!a.is_zero()) immersion_keys.insert(key);
                pair_keys.insert(std::move(key));
                if (a.is_zero()) continue;
                std::optional<std::vector<Residue>> best;
                for (std::uint64_t c = 1; c < p; ++c) {
                    std::vector<Residue> g;
                    for (std::uint64_t t = 0; t < p; ++t) {
                        const FieldVector y = tau.evaluate(b + rmul(c, t, p) * a);
                        g.insert(g.end(), y.raw().begin(), y.raw().end());
                    }
                    if (!best || g < *best) best = std::move(g);
                }
                group_keys.insert(std::move(*best));
            }
        }
    }
    return {pair_keys.size(), immersion_keys.size(), group_keys.size()};
}

}  // namespace hlg

#endif  // HLG_AUTOS_HPP
