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

#ifndef HLG_MPOLY_HPP
#define HLG_MPOLY_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"

namespace hlg {

// ---------------------------------------------------------------------------
// Term budget
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultTermBudget = 5'000'000;

namespace detail {
inline std::atomic<std::size_t>& global_term_budget() {
    static std::atomic<std::size_t> budget{kDefaultTermBudget};
    return budget;
}
inline thread_local std::size_t scoped_term_budget = 0;
}  // namespace detail

/// Maximum number of terms any single polynomial may reach.
inline std::size_t term_budget() {
    return detail::scoped_term_budget ? detail::scoped_term_budget : detail::global_term_budget().load();
}
inline void set_term_budget(std::size_t n) { detail::global_term_budget().store(n ? n : kDefaultTermBudget); }

/// Overrides the budget on the current thread for the lifetime of the guard.
class ScopedTermBudget {
public:
    explicit ScopedTermBudget(std::size_t n) : saved_(detail::scoped_term_budget) { detail::scoped_term_budget = n; }
    ~ScopedTermBudget() { detail::scoped_term_budget = saved_; }
    ScopedTermBudget(const ScopedTermBudget&) = delete;
    ScopedTermBudget& operator=(const ScopedTermBudget&) = delete;

private:
    std::size_t saved_;
};

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

inline constexpr unsigned kMaxVars = 32;
inline constexpr unsigned kMaxExponent = 127;

/// Exponent vector packed seven bits per variable, one variable per byte,
/// variable 0 in the most significant byte of word 0. Unsigned word-wise
/// comparison is therefore lexicographic comparison of exponent tuples, and
/// the spare top bit of each byte absorbs carries in the SWAR helpers.
class Monomial {
public:
    Monomial() = default;

    static Monomial from_exponents(std::span<const unsigned> e) {
        if (e.size() > kMaxVars) throw Error(ErrorKind::ArityMismatch, "more than 32 variables");
        Monomial m;
        for (unsigned i = 0; i < e.size(); ++i) m.set(i, e[i]);
        return m;
    }
    static Monomial variable(unsigned i, unsigned e = 1) {
        Monomial m;
        m.set(i, e);
        return m;
    }

    unsigned exponent(unsigned i) const noexcept {
        return static_cast<unsigned>((w_[i >> 3] >> (56 - 8 * (i & 7))) & 0xFF);
    }
    void set(unsigned i, unsigned e) {
        if (i >= kMaxVars) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
        if (e > kMaxExponent) throw Error(ErrorKind::ExponentOverflow, "exponent above 127");
        const unsigned shift = 56 - 8 * (i & 7);
        deg_ = deg_ - exponent(i) + e;
        w_[i >> 3] = (w_[i >> 3] & ~(std::uint64_t{0xFF} << shift)) | (std::uint64_t{e} << shift);
    }

    unsigned degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    std::vector<unsigned> exponents(unsigned nvars) const {
        std::vector<unsigned> e(nvars);
        for (unsigned i = 0; i < nvars; ++i) e[i] = exponent(i);
        return e;
    }

    /// Highest variable index with a nonzero exponent plus one.
    unsigned support_end() const noexcept {
        for (unsigned i = kMaxVars; i-- > 0;)
            if (exponent(i)) return i + 1;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint64_t over = 0;
        for (int k = 0; k < 4; ++k) {
            r.w_[k] = a.w_[k] + b.w_[k];
            over |= r.w_[k];
        }
        if (over & kHigh) throw Error(ErrorKind::ExponentOverflow, "exponent above 127");
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    /// Exact quotient; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int k = 0; k < 4; ++k) r.w_[k] = a.w_[k] - b.w_[k];
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    bool divides(const Monomial& other) const noexcept {
        for (int k = 0; k < 4; ++k)
            if ((((other.w_[k] | kHigh) - w_[k]) & kHigh) != kHigh) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
        Monomial r;
        unsigned deg = 0;
        for (int k = 0; k < 4; ++k) {
            const std::uint64_t ge = ((a.w_[k] | kHigh) - b.w_[k]) & kHigh;
            const std::uint64_t mask = (ge >> 7) * 0xFF;
            r.w_[k] = (a.w_[k] & mask) | (b.w_[k] & ~mask);
            deg += byte_sum(r.w_[k]);
        }
        r.deg_ = deg;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (int k = 0; k < 4; ++k)
            if (nonzero_bytes(a.w_[k]) & nonzero_bytes(b.w_[k])) return false;
        return true;
    }

    /// Canonical storage order: total degree, then lexicographic exponent tuple.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
        return a.w_ <=> b.w_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.w_ == b.w_; }

    /// Pure lexicographic comparison with x_0 > x_1 > ...
    static std::strong_ordering lex(const Monomial& a, const Monomial& b) noexcept { return a.w_ <=> b.w_; }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : w_) h = (h ^ w) * 0xff51afd7ed558ccdULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

private:
    static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    static constexpr std::uint64_t kLow7 = 0x7F7F7F7F7F7F7F7FULL;

    static std::uint64_t nonzero_bytes(std::uint64_t x) noexcept { return (((x & kLow7) + kLow7) | x) & kHigh; }
    static unsigned byte_sum(std::uint64_t x) noexcept {
        unsigned s = 0;
        for (; x; x >>= 8) s += static_cast<unsigned>(x & 0xFF);
        return s;
    }

    std::array<std::uint64_t, 4> w_{};
    unsigned deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
    Monomial mono;
    Residue coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

// ---------------------------------------------------------------------------
// SparsePoly
// ---------------------------------------------------------------------------

/// Sparse polynomial over GF(p). Terms are kept in ascending canonical order
/// (total degree, then lexicographic exponent tuple) with no zero coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(unsigned nvars, std::uint64_t p) : nvars_(nvars), p_(p) {
        if (nvars > kMaxVars) throw Error(ErrorKind::ArityMismatch, "more than 32 variables");
    }

    static SparsePoly zero(unsigned nvars, std::uint64_t p) { return SparsePoly(nvars, p); }
    static SparsePoly constant(unsigned nvars, std::uint64_t p, Residue c) {
        SparsePoly f(nvars, p);
        if (c % p) f.terms_.push_back({Monomial{}, c % p});
        return f;
    }
    static SparsePoly variable(unsigned nvars, std::uint64_t p, unsigned i) {
        if (i >= nvars) throw Error(ErrorKind::ArityMismatch, "variable index out of range");
        SparsePoly f(nvars, p);
        f.terms_.push_back({Monomial::variable(i), 1 % p});
        return f;
    }
    static SparsePoly monomial(unsigned nvars, std::uint64_t p, const Monomial& m, Residue c) {
        if (m.support_end() > nvars) throw Error(ErrorKind::ArityMismatch, "monomial uses a variable outside the ring");
        SparsePoly f(nvars, p);
        if (c % p) f.terms_.push_back({m, c % p});
        return f;
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    static SparsePoly from_terms(unsigned nvars, std::uint64_t p, std::vector<Term> terms) {
        SparsePoly f(nvars, p);
        for (auto& t : terms) {
            if (t.mono.support_end() > nvars) throw Error(ErrorKind::ArityMismatch, "monomial uses a variable outside the ring");
            t.coeff %= p;
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
        for (auto& t : terms) {
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                f.terms_.back().coeff = radd(f.terms_.back().coeff, t.coeff, p);
            } else {
                f.terms_.push_back(t);
            }
        }
        std::erase_if(f.terms_, [](const Term& t) { return t.coeff == 0; });
        f.check_budget();
        return f;
    }

    /// Affine form c0 + sum_i coeffs[i] * x_i.
    static SparsePoly affine(std::uint64_t p, const FieldVector& coeffs, Residue c0) {
        std::vector<Term> t;
        t.push_back({Monomial{}, c0});
        for (unsigned i = 0; i < coeffs.size(); ++i) t.push_back({Monomial::variable(i), coeffs[i]});
        return from_terms(static_cast<unsigned>(coeffs.size()), p, std::move(t));
    }

    unsigned nvars() const noexcept { return nvars_; }
    std::uint64_t modulus() const noexcept { return p_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Residue constant_term() const noexcept {
        return (!terms_.empty() && terms_.front().mono.is_one()) ? terms_.front().coeff : 0;
    }

    Residue coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
        return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
    }

    int total_degree() const noexcept {
        return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.back().mono.degree());
    }

    /// Largest exponent of variable i over all terms.
    unsigned degree_in(unsigned i) const noexcept {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exponent(i));
        return d;
    }

    /// Total degree restricted to variables in [begin, end).
    int block_degree(unsigned begin, unsigned end) const noexcept {
        int d = kZeroDegree;
        for (const auto& t : terms_) {
            int s = 0;
            for (unsigned i = begin; i < end; ++i) s += static_cast<int>(t.mono.exponent(i));
            d = std::max(d, s);
        }
        return d;
    }

    // -- arithmetic ---------------------------------------------------------

    friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) { return merge(f, g, false); }
    friend SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) { return merge(f, g, true); }
    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.coeff = rneg(t.coeff, p_);
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& g) { return *this = *this + g; }
    SparsePoly& operator-=(const SparsePoly& g) { return *this = *this - g; }

    SparsePoly scaled(Residue c) const {
        c %= p_;
        if (c == 0) return zero(nvars_, p_);
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.coeff = rmul(t.coeff, c, p_);
        return r;
    }

    /// Product with c * m. Monomial multiplication preserves the order.
    SparsePoly mul_term(const Monomial& m, Residue c) const {
        c %= p_;
        if (c == 0) return zero(nvars_, p_);
        SparsePoly r(nvars_, p_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, rmul(t.coeff, c, p_)});
        return r;
    }

    /// Heap-based product (Johnson, with the Monagan-Pearce chained insertion):
    /// the heap holds at most one pending product per term of the shorter
    /// factor, and output terms arrive in ascending order.
    friend SparsePoly operator*(const SparsePoly& f0, const SparsePoly& g0) {
        check_compatible(f0, g0);
        const bool swap = f0.size() > g0.size();
        const SparsePoly& f = swap ? g0 : f0;
        const SparsePoly& g = swap ? f0 : g0;
        SparsePoly r(f.nvars_, f.p_);
        if (f.is_zero() || g.is_zero()) return r;
        if (f.size() == 1) return g.mul_term(f.terms_[0].mono, f.terms_[0].coeff);
        const std::uint64_t p = f.p_;
        const std::size_t budget = term_budget();

        struct Entry {
            Monomial m;
            std::uint32_t i, j;
        };
        auto greater = [](const Entry& a, const Entry& b) { return a.m > b.m; };
        std::vector<Entry> heap;
        heap.reserve(f.size());
        heap.push_back({f.terms_[0].mono * g.terms_[0].mono, 0, 0});

        while (!heap.empty()) {
            const Monomial cur = heap.front().m;
            Residue acc = 0;
            while (!heap.empty() && heap.front().m == cur) {
                std::pop_heap(heap.begin(), heap.end(), greater);
                const Entry e = heap.back();
                heap.pop_back();
                acc = radd(acc, rmul(f.terms_[e.i].coeff, g.terms_[e.j].coeff, p), p);
                if (e.j == 0 && e.i + 1 < f.size()) {
                    heap.push_back({f.terms_[e.i + 1].mono * g.terms_[0].mono, e.i + 1, 0});
                    std::push_heap(heap.begin(), heap.end(), greater);
                }
                if (e.j + 1 < g.size()) {
                    heap.push_back({f.terms_[e.i].mono * g.terms_[e.j + 1].mono, e.i, e.j + 1});
                    std::push_heap(heap.begin(), heap.end(), greater);
                }
            }
            if (acc) {
                r.terms_.push_back({cur, acc});
                if (r.terms_.size() > budget) throw TermBudgetExceeded(r.terms_.size(), budget);
            }
        }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& g) { return *this = *this * g; }

    SparsePoly pow(unsigned e) const {
        SparsePoly r = constant(nvars_, p_, 1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Sum of many polynomials by a balanced merge tree.
    static SparsePoly sum(std::vector<SparsePoly> parts, unsigned nvars, std::uint64_t p) {
        if (parts.empty()) return zero(nvars, p);
        while (parts.size() > 1) {
            std::vector<SparsePoly> next;
            next.reserve((parts.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
            if (parts.size() % 2) next.push_back(std::move(parts.back()));
            parts = std::move(next);
        }
        return std::move(parts.front());
    }

    // -- evaluation ---------------------------------------------------------

    Residue evaluate(const FieldVector& x) const {
        require_same_modulus(p_, x.modulus());
        if (x.size() != nvars_) throw Error(ErrorKind::ArityMismatch, "point length must equal variable count");
        std::vector<std::vector<Residue>> pw(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            const unsigned d = degree_in(i);
            pw[i].resize(d + 1);
            pw[i][0] = 1 % p_;
            for (unsigned k = 1; k <= d; ++k) pw[i][k] = rmul(pw[i][k - 1], x[i], p_);
        }
        Residue acc = 0;
        for (const auto& t : terms_) {
            Residue v = t.coeff;
            for (unsigned i = 0; i < nvars_ && v; ++i) {
                const unsigned e = t.mono.exponent(i);
                if (e) v = rmul(v, pw[i][e], p_);
            }
            acc = radd(acc, v, p_);
        }
        return acc;
    }

    // -- variable bookkeeping ----------------------------------------------

    /// Same polynomial viewed in a ring with `new_nvars` variables, variable i
    /// renamed to `targets[i]`. Used to place an n-variable polynomial into a
    /// block of a larger ring.
    SparsePoly rename(unsigned new_nvars, std::span<const unsigned> targets) const {
        if (targets.size() != nvars_) throw Error(ErrorKind::ArityMismatch, "rename target count");
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const auto& term : terms_) {
            Monomial m;
            for (unsigned i = 0; i < nvars_; ++i) {
                const unsigned e = term.mono.exponent(i);
                if (!e) continue;
                if (targets[i] >= new_nvars) throw Error(ErrorKind::ArityMismatch, "rename target out of range");
                m.set(targets[i], m.exponent(targets[i]) + e);
            }
            t.push_back({m, term.coeff});
        }
        return from_terms(new_nvars, p_, std::move(t));
    }

    /// Copy of this polynomial placed at variable offset `offset` in a ring of `new_nvars`.
    SparsePoly shifted(unsigned new_nvars, unsigned offset) const {
        std::vector<unsigned> tg(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) tg[i] = offset + i;
        return rename(new_nvars, tg);
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.nvars_ == b.nvars_ && a.p_ == b.p_ && a.terms_ == b.terms_;
    }

    static void check_compatible(const SparsePoly& f, const SparsePoly& g) {
        require_same_modulus(f.p_, g.p_);
        if (f.nvars_ != g.nvars_)
            throw Error(ErrorKind::ArityMismatch,
                        "polynomials in " + std::to_string(f.nvars_) + " and " + std::to_string(g.nvars_) + " variables");
    }

private:
    void check_budget() const {
        if (terms_.size() > term_budget()) throw TermBudgetExceeded(terms_.size(), term_budget());
    }

    static SparsePoly merge(const SparsePoly& f, const SparsePoly& g, bool subtract) {
        check_compatible(f, g);
        const std::uint64_t p = f.p_;
        SparsePoly r(f.nvars_, p);
        r.terms_.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() || j < g.size()) {
            if (j == g.size() || (i < f.size() && f.terms_[i].mono < g.terms_[j].mono)) {
                r.terms_.push_back(f.terms_[i++]);
            } else if (i == f.size() || g.terms_[j].mono < f.terms_[i].mono) {
                const Residue c = subtract ? rneg(g.terms_[j].coeff, p) : g.terms_[j].coeff;
                r.terms_.push_back({g.terms_[j++].mono, c});
            } else {
                const Residue c = subtract ? rsub(f.terms_[i].coeff, g.terms_[j].coeff, p)
                                           : radd(f.terms_[i].coeff, g.terms_[j].coeff, p);
                if (c) r.terms_.push_back({f.terms_[i].mono, c});
                ++i;
                ++j;
            }
        }
        r.check_budget();
        return r;
    }

    unsigned nvars_ = 0;
    std::uint64_t p_ = 2;
    std::vector<Term> terms_;
};

/// Exchanges the first and second halves of the variables (x-block and y-block).
inline SparsePoly block_swap(const SparsePoly& f, unsigned n) {
    if (f.nvars() != 2 * n) throw Error(ErrorKind::ArityMismatch, "block_swap needs 2n variables");
    std::vector<unsigned> tg(2 * n);
    for (unsigned i = 0; i < n; ++i) {
        tg[i] = n + i;
        tg[n + i] = i;
    }
    return f.rename(2 * n, tg);
}

// ---------------------------------------------------------------------------
// PolyMap
// ---------------------------------------------------------------------------

/// A tuple of polynomials in a common ring, read as a map A^m -> A^n.
class PolyMap {
public:
    PolyMap() = default;
    PolyMap(unsigned in_vars, std::uint64_t p, std::vector<SparsePoly> comps)
        : in_vars_(in_vars), p_(p), comps_(std::move(comps)) {
        for (const auto& c : comps_) {
            require_same_modulus(p_, c.modulus());
            if (c.nvars() != in_vars_) throw Error(ErrorKind::ArityMismatch, "component arity differs from map arity");
        }
    }

    static PolyMap identity(unsigned n, std::uint64_t p) {
        std::vector<SparsePoly> c;
        for (unsigned i = 0; i < n; ++i) c.push_back(SparsePoly::variable(n, p, i));
        return PolyMap(n, p, std::move(c));
    }

    /// x -> M x + b.
    static PolyMap affine(const FieldMatrix& m, const FieldVector& b) {
        require_same_modulus(m.modulus(), b.modulus());
        if (b.size() != m.rows()) throw Error(ErrorKind::ArityMismatch, "offset length must equal row count");
        std::vector<SparsePoly> c;
        for (std::size_t i = 0; i < m.rows(); ++i) c.push_back(SparsePoly::affine(m.modulus(), m.row(i), b[i]));
        return PolyMap(static_cast<unsigned>(m.cols()), m.modulus(), std::move(c));
    }

    unsigned in_vars() const noexcept { return in_vars_; }
    unsigned out_dim() const noexcept { return static_cast<unsigned>(comps_.size()); }
    std::uint64_t modulus() const noexcept { return p_; }
    const std::vector<SparsePoly>& components() const noexcept { return comps_; }
    const SparsePoly& operator[](std::size_t i) const { return comps_.at(i); }

    FieldVector evaluate(const FieldVector& x) const {
        FieldVector r(p_, comps_.size());
        for (std::size_t i = 0; i < comps_.size(); ++i) r[i] = comps_[i].evaluate(x);
        return r;
    }

    int total_degree() const noexcept {
        int d = kZeroDegree;
        for (const auto& c : comps_) d = std::max(d, c.total_degree());
        return d;
    }

    std::size_t term_count() const noexcept {
        std::size_t n = 0;
        for (const auto& c : comps_) n += c.size();
        return n;
    }

    bool is_identity() const { return in_vars_ == comps_.size() && *this == identity(in_vars_, p_); }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    unsigned in_vars_ = 0;
    std::uint64_t p_ = 2;
    std::vector<SparsePoly> comps_;
};

// ---------------------------------------------------------------------------
// Composition (the expansion operator)
// ---------------------------------------------------------------------------

namespace detail {

/// Cached powers of each inner component, filled before any parallel use.
class PowerCache {
public:
    explicit PowerCache(const PolyMap& inner) : inner_(inner), pw_(inner.out_dim()) {
        for (unsigned j = 0; j < inner.out_dim(); ++j)
            pw_[j].push_back(SparsePoly::constant(inner.in_vars(), inner.modulus(), 1));
    }

    void reserve(unsigned j, unsigned e) {
        while (pw_[j].size() <= e) pw_[j].push_back(pw_[j].back() * inner_[j]);
    }

    const SparsePoly& power(unsigned j, unsigned e) const { return pw_[j][e]; }

private:
    const PolyMap& inner_;
    std::vector<std::vector<SparsePoly>> pw_;
};

/// Horner-style substitution: split the terms by the exponent of `var`,
/// substitute the remaining variables recursively, then recombine with the
/// cached powers of inner component `var`.
inline SparsePoly substitute(std::vector<Term>& terms, unsigned var, unsigned nouter, const PowerCache& cache,
                             unsigned nvars, std::uint64_t p) {
    if (terms.empty()) return SparsePoly::zero(nvars, p);
    if (var == nouter) {
        Residue c = 0;
        for (const auto& t : terms) c = radd(c, t.coeff, p);
        return SparsePoly::constant(nvars, p, c);
    }
    std::map<unsigned, std::vector<Term>> groups;
    for (const auto& t : terms) groups[t.mono.exponent(var)].push_back(t);
    std::vector<SparsePoly> parts;
    parts.reserve(groups.size());
    for (auto& [e, group] : groups) {
        SparsePoly rest = substitute(group, var + 1, nouter, cache, nvars, p);
        parts.push_back(e == 0 ? std::move(rest) : rest * cache.power(var, e));
    }
    return SparsePoly::sum(std::move(parts), nvars, p);
}

}  // namespace detail

/// Expands f(inner(x)) into canonical sparse form.
inline SparsePoly compose(const SparsePoly& f, const PolyMap& inner) {
    require_same_modulus(f.modulus(), inner.modulus());
    if (f.nvars() != inner.out_dim()) throw Error(ErrorKind::ArityMismatch, "outer arity must equal inner output count");
    detail::PowerCache cache(inner);
    for (unsigned j = 0; j < f.nvars(); ++j) cache.reserve(j, f.degree_in(j));
    std::vector<Term> terms = f.terms();
    return detail::substitute(terms, 0, f.nvars(), cache, inner.in_vars(), inner.modulus());
}

/// The expansion operator on a composition: returns outer ∘ inner in sparse form.
/// Components are expanded concurrently; the result does not depend on scheduling.
inline PolyMap expand(const PolyMap& outer, const PolyMap& inner) {
    require_same_modulus(outer.modulus(), inner.modulus());
    if (outer.in_vars() != inner.out_dim()) throw Error(ErrorKind::ArityMismatch, "outer arity must equal inner output count");
    detail::PowerCache cache(inner);
    for (unsigned j = 0; j < outer.in_vars(); ++j) {
        unsigned d = 0;
        for (const auto& c : outer.components()) d = std::max(d, c.degree_in(j));
        cache.reserve(j, d);
    }
    const std::size_t budget = term_budget();
    auto one = [&](std::size_t i) {
        ScopedTermBudget guard(budget);
        std::vector<Term> terms = outer[i].terms();
        return detail::substitute(terms, 0, outer.in_vars(), cache, inner.in_vars(), inner.modulus());
    };
    std::vector<SparsePoly> out(outer.out_dim());
    if (outer.out_dim() > 1 && outer.term_count() > 64) {
        std::vector<std::future<SparsePoly>> jobs;
        for (std::size_t i = 0; i < outer.out_dim(); ++i) jobs.push_back(std::async(std::launch::async, one, i));
        for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < outer.out_dim(); ++i) out[i] = one(i);
    }
    return PolyMap(inner.in_vars(), inner.modulus(), std::move(out));
}

inline Residue evaluate(const SparsePoly& f, const FieldVector& x) { return f.evaluate(x); }
inline FieldVector evaluate(const PolyMap& f, const FieldVector& x) { return f.evaluate(x); }
inline int total_degree(const SparsePoly& f) { return f.total_degree(); }
inline int total_degree(const PolyMap& f) { return f.total_degree(); }

/// Stacks maps with a shared domain: x -> (f(x), g(x)).
inline PolyMap concat(const PolyMap& f, const PolyMap& g) {
    std::vector<SparsePoly> c = f.components();
    c.insert(c.end(), g.components().begin(), g.components().end());
    return PolyMap(f.in_vars(), f.modulus(), std::move(c));
}

}  // namespace hlg

#endif  // HLG_MPOLY_HPP
