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

#ifndef HLG_FFIELD_HPP
#define HLG_FFIELD_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

#if !defined(__SIZEOF_INT128__)
#error "hlg requires unsigned __int128 (GCC or Clang)."
#endif

namespace hlg {

using Residue = std::uint64_t;

/// Largest supported modulus. Sums of two residues must fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62);

// ---------------------------------------------------------------------------
// Raw residue arithmetic. Arguments are canonical residues in [0, p).
// ---------------------------------------------------------------------------

constexpr Residue radd(Residue a, Residue b, std::uint64_t p) noexcept {
    const Residue s = a + b;
    return s >= p ? s - p : s;
}

constexpr Residue rsub(Residue a, Residue b, std::uint64_t p) noexcept {
    return a >= b ? a - b : a + p - b;
}

constexpr Residue rneg(Residue a, std::uint64_t p) noexcept { return a == 0 ? 0 : p - a; }

constexpr Residue rmul(Residue a, Residue b, std::uint64_t p) noexcept {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
}

constexpr Residue rpow(Residue base, std::uint64_t e, std::uint64_t p) noexcept {
    Residue r = 1 % p;
    while (e) {
        if (e & 1) r = rmul(r, base, p);
        base = rmul(base, base, p);
        e >>= 1;
    }
    return r;
}

/// Multiplicative inverse by the extended Euclidean algorithm.
inline Residue rinv(Residue a, std::uint64_t p) {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    std::int64_t t0 = 0, t1 = 1;
    std::uint64_t r0 = p, r1 = a;
    while (r1 != 0) {
        const std::uint64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        const auto tn = static_cast<__int128>(t0) - static_cast<__int128>(q) * t1;
        t0 = t1;
        t1 = static_cast<std::int64_t>(tn);
    }
    // r0 == gcd(a, p) == 1 for prime p and a != 0
    return t0 < 0 ? static_cast<Residue>(t0 + static_cast<std::int64_t>(p)) : static_cast<Residue>(t0);
}

/// Reduces an arbitrary signed integer into [0, p).
constexpr Residue rreduce(std::int64_t v, std::uint64_t p) noexcept {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return static_cast<Residue>(r < 0 ? r + m : r);
}

/// Deterministic Miller-Rabin. The first twelve prime bases are exact for
/// every 64-bit input, which covers both the < 2^32 range and the rest of
/// the word-sized moduli this library accepts.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        Residue x = rpow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = rmul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Validates a modulus once; every other type trusts its stored modulus.
inline std::uint64_t checked_modulus(std::uint64_t p) {
    if (p >= kMaxModulus) throw Error(ErrorKind::InvalidInput, "modulus " + std::to_string(p) + " is not word-sized");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    return p;
}

inline void require_same_modulus(std::uint64_t p, std::uint64_t q) {
    if (p != q) throw Error(ErrorKind::ModulusMismatch, std::to_string(p) + " vs " + std::to_string(q));
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::int64_t v, std::uint64_t p) : v_(rreduce(v, p)), p_(p) {}
    static FieldElement from_residue(Residue v, std::uint64_t p) {
        FieldElement e;
        e.v_ = v % p;
        e.p_ = p;
        return e;
    }

    Residue value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement inv() const { return from_residue(rinv(v_, p_), p_); }
    FieldElement pow(std::uint64_t e) const { return from_residue(rpow(v_, e, p_), p_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_modulus(a.p_, b.p_);
        return from_residue(radd(a.v_, b.v_, a.p_), a.p_);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_modulus(a.p_, b.p_);
        return from_residue(rsub(a.v_, b.v_, a.p_), a.p_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_modulus(a.p_, b.p_);
        return from_residue(rmul(a.v_, b.v_, a.p_), a.p_);
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_modulus(a.p_, b.p_);
        return from_residue(rmul(a.v_, rinv(b.v_, a.p_), a.p_), a.p_);
    }
    FieldElement operator-() const { return from_residue(rneg(v_, p_), p_); }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.v_; }

private:
    Residue v_ = 0;
    std::uint64_t p_ = 2;
};

// ---------------------------------------------------------------------------
// FieldVector
// ---------------------------------------------------------------------------

class FieldVector {
public:
    FieldVector() = default;
    FieldVector(std::uint64_t p, std::size_t n) : p_(p), v_(n, 0) {}
    FieldVector(std::uint64_t p, std::vector<Residue> entries) : p_(p), v_(std::move(entries)) {
        for (auto& e : v_) e %= p_;
    }
    FieldVector(std::uint64_t p, std::initializer_list<std::int64_t> entries) : p_(p) {
        v_.reserve(entries.size());
        for (auto e : entries) v_.push_back(rreduce(e, p));
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }

    Residue operator[](std::size_t i) const { return v_[i]; }
    Residue& operator[](std::size_t i) { return v_[i]; }
    FieldElement at(std::size_t i) const { return FieldElement::from_residue(v_.at(i), p_); }

    std::span<const Residue> values() const noexcept { return v_; }
    const std::vector<Residue>& raw() const noexcept { return v_; }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](Residue r) { return r == 0; });
    }

    friend FieldVector operator+(const FieldVector& a, const FieldVector& b) {
        check_compatible(a, b);
        FieldVector r(a.p_, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.v_[i] = radd(a.v_[i], b.v_[i], a.p_);
        return r;
    }
    friend FieldVector operator-(const FieldVector& a, const FieldVector& b) {
        check_compatible(a, b);
        FieldVector r(a.p_, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.v_[i] = rsub(a.v_[i], b.v_[i], a.p_);
        return r;
    }
    friend FieldVector operator*(Residue s, const FieldVector& a) {
        FieldVector r(a.p_, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.v_[i] = rmul(s % a.p_, a.v_[i], a.p_);
        return r;
    }

    Residue dot(const FieldVector& b) const {
        check_compatible(*this, b);
        Residue acc = 0;
        for (std::size_t i = 0; i < size(); ++i) acc = radd(acc, rmul(v_[i], b.v_[i], p_), p_);
        return acc;
    }

    friend bool operator==(const FieldVector&, const FieldVector&) = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i]);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldVector& v) { return os << '(' << v.to_string() << ')'; }

private:
    static void check_compatible(const FieldVector& a, const FieldVector& b) {
        require_same_modulus(a.p_, b.p_);
        if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "vector lengths differ");
    }

    std::uint64_t p_ = 2;
    std::vector<Residue> v_;
};

/// (x, y) as one vector of length |x| + |y|.
inline FieldVector concat(const FieldVector& x, const FieldVector& y) {
    require_same_modulus(x.modulus(), y.modulus());
    std::vector<Residue> v = x.raw();
    v.insert(v.end(), y.raw().begin(), y.raw().end());
    return FieldVector(x.modulus(), std::move(v));
}

// ---------------------------------------------------------------------------
// FieldMatrix
// ---------------------------------------------------------------------------

class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::uint64_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    FieldMatrix(std::uint64_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) : p_(p) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::ArityMismatch, "ragged matrix literal");
            for (auto e : r) a_.push_back(rreduce(e, p));
        }
    }

    static FieldMatrix identity(std::uint64_t p, std::size_t n) {
        FieldMatrix m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
        return m;
    }
    static FieldMatrix from_rows(std::uint64_t p, const std::vector<FieldVector>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        FieldMatrix m(p, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require_same_modulus(p, rows[i].modulus());
            if (rows[i].size() != c) throw Error(ErrorKind::ArityMismatch, "ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    FieldVector row(std::size_t r) const {
        return FieldVector(p_, std::vector<Residue>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                                    a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
    }

    FieldMatrix transpose() const {
        FieldMatrix t(p_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        require_same_modulus(a.p_, b.p_);
        if (a.cols_ != b.rows_) throw Error(ErrorKind::ArityMismatch, "matrix product shape");
        FieldMatrix r(a.p_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Residue aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = radd(r(i, j), rmul(aik, b(k, j), a.p_), a.p_);
            }
        return r;
    }

    friend FieldVector operator*(const FieldMatrix& a, const FieldVector& x) {
        require_same_modulus(a.p_, x.modulus());
        if (a.cols_ != x.size()) throw Error(ErrorKind::ArityMismatch, "matrix-vector shape");
        FieldVector r(a.p_, a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            Residue acc = 0;
            for (std::size_t j = 0; j < a.cols_; ++j) acc = radd(acc, rmul(a(i, j), x[j], a.p_), a.p_);
            r[i] = acc;
        }
        return r;
    }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::uint64_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> a_;
};

// ---------------------------------------------------------------------------
// Gaussian elimination
// ---------------------------------------------------------------------------

/// Reduced row echelon form with leftmost pivots. Returns pivot columns.
inline std::vector<std::size_t> rref_in_place(FieldMatrix& m, std::size_t ncols_to_pivot) {
    const std::uint64_t p = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols_to_pivot && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        const Residue inv = rinv(m(r, c), p);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = rmul(m(r, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Residue f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rsub(m(i, j), rmul(f, m(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const FieldMatrix& m) {
    FieldMatrix w = m;
    return rref_in_place(w, w.cols()).size();
}

/// Basis of {x : M x = 0}, one vector per free column (free entry set to 1).
inline std::vector<FieldVector> kernel(const FieldMatrix& m) {
    const std::uint64_t p = m.modulus();
    FieldMatrix w = m;
    const auto pivots = rref_in_place(w, w.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<FieldVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        FieldVector v(p, m.cols());
        v[f] = 1 % p;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rneg(w(i, f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

enum class SolveStatus { Unique, Underdetermined, NoSolution };

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    /// Particular solution; free columns are zero. Empty when NoSolution.
    FieldVector solution;
    /// Kernel basis; non-empty exactly when Underdetermined.
    std::vector<FieldVector> kernel;

    bool ok() const noexcept { return status != SolveStatus::NoSolution; }
};

inline SolveResult mat_solve(const FieldMatrix& m, const FieldVector& rhs) {
    require_same_modulus(m.modulus(), rhs.modulus());
    if (m.rows() != rhs.size()) throw Error(ErrorKind::ArityMismatch, "rhs length must equal row count");
    const std::uint64_t p = m.modulus();
    FieldMatrix aug(p, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    const auto pivots = rref_in_place(aug, m.cols());
    SolveResult res;
    for (std::size_t i = pivots.size(); i < m.rows(); ++i) {
        if (aug(i, m.cols()) != 0) return res;
    }
    res.solution = FieldVector(p, m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) res.solution[pivots[i]] = aug(i, m.cols());
    res.kernel = kernel(m);
    res.status = res.kernel.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return res;
}

inline FieldMatrix mat_invert(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::ArityMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const std::uint64_t p = m.modulus();
    FieldMatrix aug(p, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1 % p;
    }
    if (rref_in_place(aug, n).size() != n) throw Error(ErrorKind::Singular, "matrix is not invertible");
    FieldMatrix inv(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace hlg

#endif  // HLG_FFIELD_HPP
