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

#ifndef HLG_GROEBNER_HPP
#define HLG_GROEBNER_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "mpoly.hpp"

namespace hlg {

/// Lex or graded reverse lex over a variable priority list; priority[0] is
/// the greatest variable. An empty priority means x1 > x2 > ... > xn.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex };
    Kind kind = Kind::Lex;
    std::vector<unsigned> priority;

    static MonomialOrder lex() { return {}; }
    static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        if (kind == Kind::Lex) {
            if (priority.empty()) return Monomial::lex(a, b);
            for (unsigned v : priority)
                if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
            return std::strong_ordering::equal;
        }
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (priority.empty()) {
            for (unsigned v = kMaxVars; v-- > 0;)
                if (auto c = b.exponent(v) <=> a.exponent(v); c != 0) return c;
            return std::strong_ordering::equal;
        }
        for (auto it = priority.rbegin(); it != priority.rend(); ++it)
            if (auto c = b.exponent(*it) <=> a.exponent(*it); c != 0) return c;
        return std::strong_ordering::equal;
    }
    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    void check(unsigned nvars) const {
        if (priority.empty()) return;
        std::vector<unsigned> s = priority;
        std::sort(s.begin(), s.end());
        for (unsigned i = 0; i < s.size(); ++i)
            if (s[i] != i || s.size() != nvars) throw Error(ErrorKind::InvalidInput, "variable priority is not a permutation");
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

constexpr std::string_view to_string(MonomialOrder::Kind k) { return k == MonomialOrder::Kind::Lex ? "lex" : "grevlex"; }

struct IdealBasis {
    std::vector<SparsePoly> generators;
    MonomialOrder order;
    bool reduced = false;

    unsigned nvars() const { return generators.empty() ? 0 : generators.front().nvars(); }
    friend bool operator==(const IdealBasis&, const IdealBasis&) = default;
};

struct BuchbergerStats {
    std::size_t pairs_total = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t reductions = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_queue = 0;
    std::size_t basis_peak = 0;
    int max_degree = 0;  ///< largest total degree of any intermediate polynomial
};

inline constexpr std::size_t kDefaultIterationCap = 100'000;

namespace gb {

/// Terms sorted by descending monomial order; leading term first.
struct OPoly {
    std::vector<Term> t;

    bool zero() const noexcept { return t.empty(); }
    const Term& lead() const { return t.front(); }
    int degree() const {
        int d = kZeroDegree;
        for (const auto& x : t) d = std::max(d, static_cast<int>(x.mono.degree()));
        return d;
    }
};

inline OPoly from_sparse(const SparsePoly& f, const MonomialOrder& ord) {
    OPoly o{f.terms()};
    std::sort(o.t.begin(), o.t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return o;
}

inline SparsePoly to_sparse(const OPoly& f, unsigned nvars, std::uint64_t p) { return SparsePoly::from_terms(nvars, p, f.t); }

inline void make_monic(OPoly& f, std::uint64_t p) {
    if (f.zero() || f.lead().coeff == 1) return;
    const Residue inv = rinv(f.lead().coeff, p);
    for (auto& x : f.t) x.coeff = rmul(x.coeff, inv, p);
}

/// a - c * m * b, all in descending order.
inline OPoly sub_mul(const OPoly& a, Residue c, const Monomial& m, const OPoly& b, std::uint64_t p, const MonomialOrder& ord) {
    OPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) {
            r.t.push_back(a.t[i++]);
            continue;
        }
        const Monomial bm = b.t[j].mono * m;
        const Residue bc = rneg(rmul(c, b.t[j].coeff, p), p);
        if (i == a.t.size()) {
            r.t.push_back({bm, bc});
            ++j;
            continue;
        }
        const auto cmp = ord.compare(a.t[i].mono, bm);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            r.t.push_back({bm, bc});
            ++j;
        } else {
            const Residue s = radd(a.t[i].coeff, bc, p);
            if (s) r.t.push_back({bm, s});
            ++i;
            ++j;
        }
    }
    if (r.t.size() > term_budget()) throw TermBudgetExceeded(r.t.size(), term_budget());
    return r;
}

/// Full reduction of f by the polynomials in g (leading terms monic).
inline OPoly reduce(OPoly f, const std::vector<OPoly>& g, std::uint64_t p, const MonomialOrder& ord, int* max_degree = nullptr) {
    OPoly rem;
    while (!f.zero()) {
        const Term lt = f.lead();
        const OPoly* div = nullptr;
        for (const auto& h : g)
            if (!h.zero() && h.lead().mono.divides(lt.mono)) {
                div = &h;
                break;
            }
        if (!div) {
            rem.t.push_back(lt);
            f.t.erase(f.t.begin());
            continue;
        }
        f = sub_mul(f, rmul(lt.coeff, rinv(div->lead().coeff, p), p), lt.mono / div->lead().mono, *div, p, ord);
        if (max_degree && !f.zero()) *max_degree = std::max(*max_degree, f.degree());
    }
    return rem;
}

inline OPoly spoly(const OPoly& a, const OPoly& b, std::uint64_t p, const MonomialOrder& ord) {
    const Monomial l = Monomial::lcm(a.lead().mono, b.lead().mono);
    OPoly sa = sub_mul(OPoly{}, rneg(rinv(a.lead().coeff, p), p), l / a.lead().mono, a, p, ord);
    return sub_mul(sa, rinv(b.lead().coeff, p), l / b.lead().mono, b, p, ord);
}

inline void check_inputs(const std::vector<SparsePoly>& f) {
    if (f.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
    for (const auto& g : f) SparsePoly::check_compatible(f.front(), g);
}

}  // namespace gb

/// Remainder of f on division by the basis; no term of the result is
/// divisible by a leading term of the basis.
inline SparsePoly normal_form(const SparsePoly& f, const IdealBasis& basis) {
    std::vector<gb::OPoly> g;
    for (const auto& b : basis.generators) {
        SparsePoly::check_compatible(f, b);
        g.push_back(gb::from_sparse(b, basis.order));
    }
    return gb::to_sparse(gb::reduce(gb::from_sparse(f, basis.order), g, f.modulus(), basis.order), f.nvars(), f.modulus());
}

/// Reduced Groebner basis by Buchberger's algorithm. Pairs are taken in
/// ascending order of the lcm of their leading monomials; pairs with coprime
/// leading monomials are skipped.
inline IdealBasis buchberger(const std::vector<SparsePoly>& gens, const MonomialOrder& order = {},
                             BuchbergerStats* stats = nullptr, std::size_t iteration_cap = kDefaultIterationCap) {
    gb::check_inputs(gens);
    const unsigned n = gens.front().nvars();
    const std::uint64_t p = gens.front().modulus();
    order.check(n);
    BuchbergerStats st;

    std::vector<gb::OPoly> g;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        gb::OPoly o = gb::from_sparse(f, order);
        gb::make_monic(o, p);
        st.max_degree = std::max(st.max_degree, o.degree());
        g.push_back(std::move(o));
    }
    if (g.empty()) {
        if (stats) *stats = st;
        return {{SparsePoly::zero(n, p)}, order, true};
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            ++st.pairs_total;
            if (Monomial::coprime(g[i].lead().mono, g[j].lead().mono)) {
                ++st.pairs_skipped_coprime;
                continue;
            }
            pairs.push_back({i, j, Monomial::lcm(g[i].lead().mono, g[j].lead().mono)});
        }
        st.max_queue = std::max(st.max_queue, pairs.size());
    };
    for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            const auto c = order.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        const Pair pr = *best;
        pairs.erase(best);
        if (++st.reductions > iteration_cap) {
            if (stats) *stats = st;
            throw Error(ErrorKind::IterationCapExceeded,
                        "Buchberger pair cap of " + std::to_string(iteration_cap) + " reached; basis size " +
                            std::to_string(g.size()) + ", pending pairs " + std::to_string(pairs.size()) +
                            ", max degree " + std::to_string(st.max_degree));
        }
        gb::OPoly s = gb::spoly(g[pr.i], g[pr.j], p, order);
        if (!s.zero()) st.max_degree = std::max(st.max_degree, s.degree());
        s = gb::reduce(std::move(s), g, p, order, &st.max_degree);
        if (s.zero()) {
            ++st.zero_reductions;
            continue;
        }
        gb::make_monic(s, p);
        g.push_back(std::move(s));
        st.basis_peak = std::max(st.basis_peak, g.size());
        add_pairs(g.size() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is a multiple of another's.
    std::vector<gb::OPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !g[j].lead().mono.divides(g[i].lead().mono)) continue;
            redundant = g[j].lead().mono != g[i].lead().mono || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    // Interreduce tails.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<gb::OPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        gb::OPoly head{{minimal[i].lead()}};
        gb::OPoly tail{{minimal[i].t.begin() + 1, minimal[i].t.end()}};
        tail = gb::reduce(std::move(tail), others, p, order);
        head.t.insert(head.t.end(), tail.t.begin(), tail.t.end());
        minimal[i] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const gb::OPoly& a, const gb::OPoly& b) { return order.greater(a.lead().mono, b.lead().mono); });

    IdealBasis out{{}, order, true};
    for (const auto& m : minimal) out.generators.push_back(gb::to_sparse(m, n, p));
    if (stats) *stats = st;
    return out;
}

/// Leading monomial of f under the order.
inline Monomial leading_monomial(const SparsePoly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidInput, "zero polynomial has no leading monomial");
    Monomial best = f.terms().front().mono;
    for (const auto& t : f.terms())
        if (order.greater(t.mono, best)) best = t.mono;
    return best;
}

struct ZeroDimResult {
    bool point_shaped = false;
    std::optional<FieldVector> point;
    /// Leading monomials of the basis, for diagnostics when not point-shaped.
    std::vector<Monomial> leading;
};

/// Reads the point off a basis of the form {x_i - a_i}.
inline ZeroDimResult solve_zero_dim(const IdealBasis& basis) {
    ZeroDimResult r;
    for (const auto& g : basis.generators)
        if (!g.is_zero()) r.leading.push_back(leading_monomial(g, basis.order));
    const unsigned n = basis.nvars();
    if (basis.generators.size() != n || n == 0) return r;
    const std::uint64_t p = basis.generators.front().modulus();
    FieldVector pt(p, n);
    std::vector<bool> seen(n, false);
    for (const auto& g : basis.generators) {
        if (g.is_zero() || g.total_degree() != 1 || g.size() > 2) return r;
        unsigned var = n;
        Residue lc = 0, c0 = 0;
        for (const auto& t : g.terms()) {
            if (t.mono.is_one()) {
                c0 = t.coeff;
                continue;
            }
            for (unsigned v = 0; v < n; ++v)
                if (t.mono.exponent(v)) var = v;
            lc = t.coeff;
        }
        if (var == n || seen[var]) return r;
        seen[var] = true;
        pt[var] = rneg(rmul(c0, rinv(lc, p), p), p);
    }
    r.point_shaped = true;
    r.point = pt;
    return r;
}

/// Generators of the ideal of the closure of t -> param(t): eliminate t from
/// <x_i - param_i(t)> with lex, t greatest.
inline IdealBasis implicitize_curve(const PolyMap& param, BuchbergerStats* stats = nullptr) {
    if (param.in_vars() != 1) throw Error(ErrorKind::ArityMismatch, "parametrization must have one input");
    const unsigned n = param.out_dim();
    const std::uint64_t p = param.modulus();
    std::vector<unsigned> shift_t{0};
    std::vector<SparsePoly> gens;
    for (unsigned i = 0; i < n; ++i)
        gens.push_back(SparsePoly::variable(n + 1, p, i + 1) - param[i].rename(n + 1, shift_t));
    const IdealBasis full = buchberger(gens, MonomialOrder::lex(), stats);
    IdealBasis out{{}, MonomialOrder::lex(), true};
    std::vector<unsigned> drop_t(n + 1, 0);
    std::iota(drop_t.begin() + 1, drop_t.end(), 0u);
    for (const auto& g : full.generators) {
        if (g.degree_in(0) > 0) continue;
        // variable 0 does not occur, so it may map anywhere
        out.generators.push_back(g.rename(n, drop_t));
    }
    if (out.generators.empty()) out.generators.push_back(SparsePoly::zero(n, p));
    return out;
}

}  // namespace hlg

#endif  // HLG_GROEBNER_HPP
