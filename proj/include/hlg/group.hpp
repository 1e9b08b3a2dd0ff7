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

#ifndef HLG_GROUP_HPP
#define HLG_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autos.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "mpoly.hpp"
#include "rng.hpp"

namespace hlg {

// ---------------------------------------------------------------------------
// LinearImmersion
// ---------------------------------------------------------------------------

/// t -> b + t a with a != 0, together with the affine retraction
/// r(x) = (x_i - b_i) / a_i for a chosen coordinate i with a_i != 0.
/// By default i is the least index with a_i != 0.
class LinearImmersion {
public:
    LinearImmersion() = default;
    LinearImmersion(FieldVector a, FieldVector b, std::optional<unsigned> retraction_index = std::nullopt)
        : a_(std::move(a)), b_(std::move(b)) {
        require_same_modulus(a_.modulus(), b_.modulus());
        if (a_.size() != b_.size()) throw Error(ErrorKind::ArityMismatch, "direction and offset lengths differ");
        if (a_.is_zero()) throw Error(ErrorKind::InvalidInput, "immersion direction is zero");
        if (retraction_index) {
            if (*retraction_index >= a_.size() || a_[*retraction_index] == 0)
                throw Error(ErrorKind::InvalidInput, "retraction coordinate must have a nonzero direction entry");
            pivot_ = *retraction_index;
            explicit_ = true;
        } else {
            pivot_ = 0;
            while (a_[pivot_] == 0) ++pivot_;
        }
    }

    static LinearImmersion random(Rng& rng, std::uint64_t p, unsigned n) {
        for (;;) {
            FieldVector a(p, n), b(p, n);
            for (unsigned i = 0; i < n; ++i) a[i] = rng.below(p);
            for (unsigned i = 0; i < n; ++i) b[i] = rng.below(p);
            if (!a.is_zero()) return LinearImmersion(std::move(a), std::move(b));
        }
    }

    const FieldVector& direction() const noexcept { return a_; }
    const FieldVector& offset() const noexcept { return b_; }
    unsigned retraction_index() const noexcept { return pivot_; }
    bool explicit_retraction() const noexcept { return explicit_; }
    unsigned dim() const noexcept { return static_cast<unsigned>(a_.size()); }
    std::uint64_t modulus() const noexcept { return a_.modulus(); }

    FieldVector at(Residue t) const { return b_ + t * a_; }

    Residue retract(const FieldVector& x) const {
        return rmul(rsub(x[pivot_], b_[pivot_], modulus()), rinv(a_[pivot_], modulus()), modulus());
    }

    /// The immersion as a polynomial map A^1 -> A^n.
    PolyMap as_map() const {
        std::vector<SparsePoly> c;
        for (unsigned i = 0; i < dim(); ++i)
            c.push_back(SparsePoly::affine(modulus(), FieldVector(modulus(), std::vector<Residue>{a_[i]}), b_[i]));
        return PolyMap(1, modulus(), std::move(c));
    }

    /// The retraction as an affine polynomial in n variables.
    SparsePoly retraction() const {
        const std::uint64_t p = modulus();
        const Residue inv = rinv(a_[pivot_], p);
        FieldVector coeff(p, dim());
        coeff[pivot_] = inv;
        return SparsePoly::affine(p, coeff, rneg(rmul(b_[pivot_], inv, p), p));
    }

    friend bool operator==(const LinearImmersion& x, const LinearImmersion& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.pivot_ == y.pivot_;
    }

private:
    FieldVector a_;
    FieldVector b_;
    unsigned pivot_ = 0;
    bool explicit_ = false;
};

// ---------------------------------------------------------------------------
// Automorphism
// ---------------------------------------------------------------------------

/// A polynomial automorphism given by both directions. Tame automorphisms
/// keep their factorization for serialization.
class Automorphism {
public:
    Automorphism() = default;
    explicit Automorphism(TameAutomorphism tame)
        : forward_(tame.forward()), inverse_(tame.inverse()), tame_(std::move(tame)) {}

    /// General pair; verified symbolically in both orders.
    Automorphism(PolyMap forward, PolyMap inverse) : forward_(std::move(forward)), inverse_(std::move(inverse)) {
        if (forward_.in_vars() != forward_.out_dim() || inverse_.in_vars() != inverse_.out_dim() ||
            forward_.in_vars() != inverse_.in_vars())
            throw Error(ErrorKind::ArityMismatch, "automorphism maps must be square and of equal dimension");
        if (!expand(forward_, inverse_).is_identity() || !expand(inverse_, forward_).is_identity())
            throw Error(ErrorKind::InvalidInput, "forward and inverse maps do not compose to the identity");
    }

    static Automorphism identity(unsigned n, std::uint64_t p) {
        return Automorphism(tame_build(AffineLinearMap::identity(n, p), TriangularMap::identity(n, p),
                                       AffineLinearMap::identity(n, p)));
    }

    const PolyMap& forward() const noexcept { return forward_; }
    const PolyMap& inverse() const noexcept { return inverse_; }
    const std::optional<TameAutomorphism>& tame() const noexcept { return tame_; }
    unsigned dim() const noexcept { return forward_.in_vars(); }
    std::uint64_t modulus() const noexcept { return forward_.modulus(); }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.forward_ == b.forward_ && a.inverse_ == b.inverse_;
    }

private:
    PolyMap forward_;
    PolyMap inverse_;
    std::optional<TameAutomorphism> tame_;
};

// ---------------------------------------------------------------------------
// Trapdoor
// ---------------------------------------------------------------------------

/// Private description of a group: the immersion and the automorphism.
/// Caches the curve parametrization t -> theta(rho(t)) and the parameter
/// map x -> r(theta^{-1}(x)).
class Trapdoor {
public:
    Trapdoor() = default;
    Trapdoor(LinearImmersion immersion, Automorphism theta, unsigned d)
        : immersion_(std::move(immersion)), theta_(std::move(theta)), d_(d) {
        require_same_modulus(immersion_.modulus(), theta_.modulus());
        if (immersion_.dim() != theta_.dim()) throw Error(ErrorKind::ArityMismatch, "immersion and automorphism dimensions differ");
        tmap_ = compose(immersion_.retraction(), theta_.inverse());
        curve_ = expand(theta_.forward(), immersion_.as_map());
    }

    std::uint64_t modulus() const noexcept { return theta_.modulus(); }
    unsigned dim() const noexcept { return theta_.dim(); }
    unsigned degree() const noexcept { return d_; }
    const LinearImmersion& immersion() const noexcept { return immersion_; }
    const Automorphism& theta() const noexcept { return theta_; }

    /// x -> r(theta^{-1}(x)) as one polynomial in n variables.
    const SparsePoly& tmap() const noexcept { return tmap_; }
    /// t -> theta(rho(t)) as a map A^1 -> A^n.
    const PolyMap& curve() const noexcept { return curve_; }

    Residue param(const FieldVector& x) const { return tmap_.evaluate(x); }
    FieldVector point(Residue t) const { return curve_.evaluate(FieldVector(modulus(), std::vector<Residue>{t % modulus()})); }
    FieldVector identity() const { return point(0); }

    friend bool operator==(const Trapdoor& a, const Trapdoor& b) {
        return a.immersion_ == b.immersion_ && a.theta_ == b.theta_ && a.d_ == b.d_;
    }

private:
    LinearImmersion immersion_;
    Automorphism theta_;
    unsigned d_ = 0;
    SparsePoly tmap_;
    PolyMap curve_;
};

/// Random trapdoor from the tame family.
inline Trapdoor trapdoor_random(std::uint64_t p, unsigned n, unsigned d, std::uint64_t seed, double sparsity = 1.0,
                                Convention convention = Convention::Lambda2First,
                                std::optional<unsigned> retraction_index = std::nullopt) {
    Rng rng(seed);
    TameAutomorphism theta = tame_random(p, d, n, rng.next(), sparsity, convention);
    LinearImmersion rho = LinearImmersion::random(rng, p, n);
    if (retraction_index) {
        if (*retraction_index >= n) throw Error(ErrorKind::InvalidInput, "retraction index out of range");
        while (rho.direction()[*retraction_index] == 0) rho = LinearImmersion::random(rng, p, n);
        rho = LinearImmersion(rho.direction(), rho.offset(), retraction_index);
    }
    return Trapdoor(std::move(rho), Automorphism(std::move(theta)), d);
}

// ---------------------------------------------------------------------------
// Law synthesis
// ---------------------------------------------------------------------------

/// The group law as 2n-variable polynomials: theta(rho(tmap(x) + tmap(y))).
inline PolyMap synth_law(const Trapdoor& trap) {
    const unsigned n = trap.dim();
    const std::uint64_t p = trap.modulus();
    const SparsePoly s = trap.tmap().shifted(2 * n, 0) + trap.tmap().shifted(2 * n, n);
    return expand(trap.curve(), PolyMap(2 * n, p, {s}));
}

/// Negation as n-variable polynomials: theta(rho(-tmap(x))).
inline PolyMap synth_negation(const Trapdoor& trap) {
    return expand(trap.curve(), PolyMap(trap.dim(), trap.modulus(), {-trap.tmap()}));
}

/// Exact total degree of every law component without expanding the law.
/// With s = tmap(x) + tmap(y) and c_i(t) the i-th curve coordinate, the law
/// component is c_i(s). F[x, y] is a domain and the top forms of tmap(x) and
/// tmap(y) live in disjoint variables, so deg c_i(s) = deg_t(c_i) * deg(tmap).
inline std::vector<int> law_degrees(const Trapdoor& trap) {
    const int dt = trap.tmap().total_degree();
    std::vector<int> out;
    for (const auto& c : trap.curve().components()) {
        const int dc = c.total_degree();
        out.push_back(dc <= 0 ? dc : dc * dt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Public description and elements
// ---------------------------------------------------------------------------

struct GroupElement {
    FieldVector coords;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement element_from_param(const Trapdoor& trap, Residue t) { return {trap.point(t)}; }

/// What a group publishes: generator, identity and (optionally) the law.
struct CurveGroup {
    std::uint64_t p = 0;
    unsigned n = 0;
    FieldVector generator;
    FieldVector identity;
    std::optional<PolyMap> law;
    std::optional<PolyMap> negation;
};

/// Derives the public half. The generator is the element at parameter 1.
inline CurveGroup make_public(const Trapdoor& trap, bool with_law = true) {
    CurveGroup g;
    g.p = trap.modulus();
    g.n = trap.dim();
    g.generator = trap.point(1);
    g.identity = trap.identity();
    if (with_law) {
        g.law = synth_law(trap);
        g.negation = synth_negation(trap);
    }
    return g;
}

enum class Mode { Law, Trapdoor };

/// Group operations over a public description, optionally backed by the
/// trapdoor. Law mode evaluates the published polynomials; trapdoor mode
/// moves to the parameter line and back.
class Group {
public:
    explicit Group(CurveGroup pub, std::optional<Trapdoor> trap = std::nullopt)
        : pub_(std::move(pub)), trap_(std::move(trap)) {}
    explicit Group(const Trapdoor& trap, bool with_law = true) : pub_(make_public(trap, with_law)), trap_(trap) {}

    const CurveGroup& public_part() const noexcept { return pub_; }
    const std::optional<Trapdoor>& trapdoor() const noexcept { return trap_; }
    std::uint64_t modulus() const noexcept { return pub_.p; }
    GroupElement identity() const { return {pub_.identity}; }
    GroupElement generator() const { return {pub_.generator}; }

    bool has_mode(Mode m) const noexcept {
        return m == Mode::Law ? (pub_.law.has_value() && pub_.negation.has_value()) : trap_.has_value();
    }

    GroupElement add(const GroupElement& a, const GroupElement& b, Mode mode) const {
        check_arity(a);
        check_arity(b);
        if (mode == Mode::Law) {
            require(Mode::Law);
            FieldVector xy(pub_.p, 2 * pub_.n);
            for (unsigned i = 0; i < pub_.n; ++i) {
                xy[i] = a.coords[i];
                xy[pub_.n + i] = b.coords[i];
            }
            return {pub_.law->evaluate(xy)};
        }
        require(Mode::Trapdoor);
        return {trap_->point(radd(trap_->param(a.coords), trap_->param(b.coords), pub_.p))};
    }

    GroupElement neg(const GroupElement& a, Mode mode) const {
        check_arity(a);
        if (mode == Mode::Law) {
            require(Mode::Law);
            return {pub_.negation->evaluate(a.coords)};
        }
        require(Mode::Trapdoor);
        return {trap_->point(rneg(trap_->param(a.coords), pub_.p))};
    }

    /// Double-and-add. e is not reduced, so e = p yields the identity.
    GroupElement scalar_mul(const GroupElement& a, std::uint64_t e, Mode mode) const {
        require(mode);
        GroupElement acc = identity();
        GroupElement base = a;
        while (e) {
            if (e & 1) acc = add(acc, base, mode);
            e >>= 1;
            if (e) base = add(base, base, mode);
        }
        return acc;
    }

private:
    void require(Mode m) const {
        if (!has_mode(m))
            throw Error(ErrorKind::ModeUnavailable, m == Mode::Law ? "group law was not synthesized" : "no trapdoor available");
    }
    void check_arity(const GroupElement& a) const {
        require_same_modulus(pub_.p, a.coords.modulus());
        if (a.coords.size() != pub_.n) throw Error(ErrorKind::ArityMismatch, "point has the wrong dimension");
    }

    CurveGroup pub_;
    std::optional<Trapdoor> trap_;
};

// ---------------------------------------------------------------------------
// Trapdoor-side queries
// ---------------------------------------------------------------------------

/// Discrete logarithm of Q to base P0 via the parameter map.
inline Residue dlog_trapdoor(const Trapdoor& trap, const GroupElement& q, const GroupElement& base) {
    const std::uint64_t p = trap.modulus();
    const Residue tb = trap.param(base.coords);
    if (tb == 0) throw Error(ErrorKind::IdentityBase, "base is the identity");
    return rmul(trap.param(q.coords), rinv(tb, p), p);
}

/// True iff x lies on the curve theta(rho(A^1)).
inline bool member(const Trapdoor& trap, const FieldVector& x) {
    if (x.size() != trap.dim()) throw Error(ErrorKind::ArityMismatch, "point has the wrong dimension");
    require_same_modulus(trap.modulus(), x.modulus());
    const FieldVector pre = trap.theta().inverse().evaluate(x);
    return pre == trap.immersion().at(trap.immersion().retract(pre));
}

/// The unique structure on the same curve sending P0 to 0 and P1 to 1:
/// rho'(t) = rho(s0 + (s1 - s0) t) with s_i the old parameters.
inline Trapdoor reparametrize(const Trapdoor& trap, const GroupElement& p0, const GroupElement& p1) {
    const std::uint64_t p = trap.modulus();
    if (p0 == p1) throw Error(ErrorKind::DegenerateInput, "P0 and P1 coincide");
    if (!member(trap, p0.coords) || !member(trap, p1.coords))
        throw Error(ErrorKind::InvalidInput, "reparametrization points must lie on the curve");
    const Residue s0 = trap.param(p0.coords);
    const Residue s1 = trap.param(p1.coords);
    const LinearImmersion& rho = trap.immersion();
    FieldVector a = rsub(s1, s0, p) * rho.direction();
    FieldVector b = rho.offset() + s0 * rho.direction();
    std::optional<unsigned> idx;
    if (rho.explicit_retraction()) idx = rho.retraction_index();
    return Trapdoor(LinearImmersion(std::move(a), std::move(b), idx), trap.theta(), trap.degree());
}

}  // namespace hlg

#endif  // HLG_GROUP_HPP
