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

#ifndef HLG_INVERSION_HPP
#define HLG_INVERSION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autos.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "groebner.hpp"
#include "mpoly.hpp"
#include "rng.hpp"

namespace hlg {

// ---------------------------------------------------------------------------
// Conic through three points with its point at infinity doubled
// ---------------------------------------------------------------------------

/// sigma(t) = Q0 + t A + t^2 B, so sigma(0) = Q0, sigma(1) = Q1 and
/// sigma(tstar) = Q. u and v are affine functionals with u(sigma(t)) = t and
/// v(sigma(t)) = t^2; plane_eqs vanish on the plane Q0 + span(A, B).
struct ConicFrame {
    FieldVector q0, q1, q;
    Residue tstar = 0;
    FieldVector a, b;
    PolyMap sigma;
    SparsePoly u, v;
    std::vector<SparsePoly> plane_eqs;

    std::uint64_t modulus() const noexcept { return q0.modulus(); }
    unsigned dim() const noexcept { return static_cast<unsigned>(q0.size()); }

    /// plane equations followed by v - u^2; their common zeros are the conic.
    std::vector<SparsePoly> generators() const {
        std::vector<SparsePoly> g = plane_eqs;
        g.push_back(v - u * u);
        return g;
    }
};

inline ConicFrame build_conic(const FieldVector& q0, const FieldVector& q1, const FieldVector& q, Residue tstar) {
    const std::uint64_t p = q0.modulus();
    const unsigned n = static_cast<unsigned>(q0.size());
    require_same_modulus(p, q1.modulus());
    require_same_modulus(p, q.modulus());
    if (q1.size() != n || q.size() != n) throw Error(ErrorKind::ArityMismatch, "conic points differ in length");
    if (n < 2) throw Error(ErrorKind::InvalidInput, "conics need n >= 2");
    tstar %= p;
    if (tstar == 0 || tstar == 1) throw Error(ErrorKind::InvalidInput, "tstar must differ from 0 and 1");

    ConicFrame c;
    c.q0 = q0;
    c.q1 = q1;
    c.q = q;
    c.tstar = tstar;
    const FieldVector d1 = q1 - q0;
    const FieldVector dq = q - q0;
    const Residue denom = rsub(rmul(tstar, tstar, p), tstar, p);
    c.b = rinv(denom, p) * (dq - tstar * d1);
    c.a = d1 - c.b;

    const FieldMatrix m = FieldMatrix::from_rows(p, {c.a, c.b});
    if (rank(m) < 2) throw Error(ErrorKind::DegenerateConic, "Q0, Q1 and Q are collinear");

    auto functional = [&](const FieldVector& w) {
        // w . (x - q0)
        return SparsePoly::affine(p, w, rneg(w.dot(q0), p));
    };
    const SolveResult su = mat_solve(m, FieldVector(p, {1, 0}));
    const SolveResult sv = mat_solve(m, FieldVector(p, {0, 1}));
    c.u = functional(su.solution);
    c.v = functional(sv.solution);
    for (const auto& k : kernel(m)) c.plane_eqs.push_back(functional(k));

    std::vector<SparsePoly> comps;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Term> t{{Monomial{}, q0[i]}, {Monomial::variable(0), c.a[i]},
                            {Monomial::variable(0) * Monomial::variable(0), c.b[i]}};
        comps.push_back(SparsePoly::from_terms(1, p, std::move(t)));
    }
    c.sigma = PolyMap(1, p, std::move(comps));
    return c;
}

// ---------------------------------------------------------------------------
// Discrete-log witnesses
// ---------------------------------------------------------------------------

enum class DlogType { Type2, Type3, Type4 };

constexpr std::string_view to_string(DlogType t) {
    switch (t) {
        case DlogType::Type2: return "type2";
        case DlogType::Type3: return "type3";
        case DlogType::Type4: return "type4";
    }
    return "?";
}

/// A polynomial delta with delta(x(t)) = t along a parametrized curve x(t).
struct DlogWitness {
    SparsePoly delta;
    DlogType dtype = DlogType::Type2;
    int degree = kZeroDegree;
    std::optional<FieldVector> p0;  ///< delta(p0) = 0
    std::optional<FieldVector> p1;  ///< delta(p1) = 1
};

/// Honest adversary built from the full automorphism: delta = u o theta.
inline DlogWitness oracle_exact(const PolyMap& theta_forward, const ConicFrame& conic) {
    DlogWitness w;
    w.delta = compose(conic.u, theta_forward);
    w.dtype = DlogType::Type4;
    w.degree = w.delta.total_degree();
    return w;
}

/// Black-box adversary: interpolate delta of degree <= dmax through the
/// samples (point, parameter). Returns nullopt when no such polynomial exists.
inline std::optional<DlogWitness> oracle_interpolate(const std::vector<std::pair<FieldVector, Residue>>& samples,
                                                     unsigned n, unsigned dmax) {
    if (samples.empty()) throw Error(ErrorKind::InvalidInput, "no samples");
    const std::uint64_t p = samples.front().first.modulus();
    const std::vector<Monomial> monos = monomials_up_to(n, n, dmax);
    FieldMatrix m(p, samples.size(), monos.size());
    FieldVector rhs(p, samples.size());
    for (std::size_t r = 0; r < samples.size(); ++r) {
        const auto& [x, t] = samples[r];
        if (x.size() != n) throw Error(ErrorKind::ArityMismatch, "sample point has the wrong dimension");
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Residue val = 1;
            for (unsigned i = 0; i < n; ++i) val = rmul(val, rpow(x[i], monos[c].exponent(i), p), p);
            m(r, c) = val;
        }
        rhs[r] = t % p;
    }
    const SolveResult s = mat_solve(m, rhs);
    if (!s.ok()) return std::nullopt;
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) terms.push_back({monos[c], s.solution[c]});
    DlogWitness w;
    w.delta = SparsePoly::from_terms(n, p, std::move(terms));
    w.dtype = DlogType::Type3;
    w.degree = w.delta.total_degree();
    for (const auto& [x, t] : samples) {
        if (t % p == 0 && !w.p0) w.p0 = x;
        if (t % p == 1 && !w.p1) w.p1 = x;
    }
    if (!w.p0 || !w.p1) w.dtype = DlogType::Type2;
    return w;
}

// ---------------------------------------------------------------------------
// Inversion pipeline
// ---------------------------------------------------------------------------

/// The conic pulled back through the public map, with its anchor preimages.
struct PullbackInstance {
    ConicFrame conic;
    PolyMap theta;
    std::vector<SparsePoly> pulled;
    FieldVector p0, p1;
    std::optional<DlogWitness> oracle;
};

/// Supplies a witness for the pulled-back curve, or nullopt if it has none.
using OracleProvider = std::function<std::optional<DlogWitness>(const PullbackInstance&)>;

inline OracleProvider exact_provider(PolyMap theta_forward) {
    return [f = std::move(theta_forward)](const PullbackInstance& inst) -> std::optional<DlogWitness> {
        return oracle_exact(f, inst.conic);
    };
}

/// Interpolating adversary with trapdoor-side sampling of the pulled-back
/// curve t -> theta^{-1}(sigma(t)).
inline OracleProvider interpolating_provider(PolyMap theta_inverse, unsigned dmax, unsigned extra_samples = 8) {
    return [inv = std::move(theta_inverse), dmax, extra_samples](const PullbackInstance& inst) {
        const std::uint64_t p = inst.conic.modulus();
        const unsigned n = inst.conic.dim();
        const std::size_t need = monomials_up_to(n, n, dmax).size() + extra_samples;
        std::vector<std::pair<FieldVector, Residue>> samples;
        for (Residue t = 0; samples.size() < need && t < p; ++t)
            samples.emplace_back(inv.evaluate(inst.conic.sigma.evaluate(FieldVector(p, std::vector<Residue>{t}))), t);
        return oracle_interpolate(samples, n, dmax);
    };
}

struct InversionReport {
    unsigned n = 0;
    std::uint64_t seed = 0;
    unsigned attempts = 0;
    unsigned retries = 0;
    Residue tstar = 0;
    std::optional<ConicFrame> conic;
    std::vector<Monomial> gb_leading;
    std::size_t gb_size = 0;
    FieldVector point;
    bool forward_check = false;
    int max_gb_degree = 0;
    int max_input_degree = 0;
    int witness_degree = kZeroDegree;
    std::vector<std::string> failures;  ///< one entry per failed attempt
};

inline constexpr unsigned kDefaultMaxRetries = 5;

/// Finds P with theta(P) = Q from the forward map alone plus a discrete-log
/// oracle for the pulled-back conic. Each failed attempt draws fresh P0, P1
/// and tstar; after max_retries retries RetriesExhausted is thrown.
inline InversionReport invert(const PolyMap& theta, const FieldVector& q, const OracleProvider& oracle, std::uint64_t seed,
                              unsigned max_retries = kDefaultMaxRetries, std::optional<Residue> fixed_tstar = std::nullopt) {
    const std::uint64_t p = theta.modulus();
    const unsigned n = theta.in_vars();
    if (theta.out_dim() != n) throw Error(ErrorKind::ArityMismatch, "automorphism must be square");
    if (q.size() != n) throw Error(ErrorKind::ArityMismatch, "target point has the wrong dimension");
    require_same_modulus(p, q.modulus());
    if (p < 3) throw Error(ErrorKind::InvalidInput, "need p >= 3 to pick tstar outside {0, 1}");
    if (fixed_tstar && (*fixed_tstar % p == 0 || *fixed_tstar % p == 1))
        throw Error(ErrorKind::InvalidInput, "tstar must lie outside {0, 1}");

    Rng rng(seed);
    InversionReport rep;
    rep.n = n;
    rep.seed = seed;
    auto random_point = [&] {
        FieldVector x(p, n);
        for (unsigned i = 0; i < n; ++i) x[i] = rng.below(p);
        return x;
    };

    for (unsigned attempt = 0; attempt <= max_retries; ++attempt) {
        rep.attempts = attempt + 1;
        rep.retries = attempt;
        PullbackInstance inst;
        inst.theta = theta;
        inst.p0 = random_point();
        inst.p1 = random_point();
        const FieldVector q0 = theta.evaluate(inst.p0);
        const FieldVector q1 = theta.evaluate(inst.p1);
        const Residue tstar = fixed_tstar ? *fixed_tstar % p : rng.between(2, p - 1);
        rep.tstar = tstar;
        if (q == q0 || q == q1) {
            rep.point = q == q0 ? inst.p0 : inst.p1;
            rep.forward_check = true;
            return rep;
        }
        try {
            inst.conic = build_conic(q0, q1, q, tstar);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateConic && e.kind() != ErrorKind::InvalidInput) throw;
            rep.failures.push_back(std::string("degenerate-conic: ") + e.what());
            continue;
        }
        for (const auto& g : inst.conic.generators()) inst.pulled.push_back(compose(g, theta));
        inst.oracle = oracle(inst);
        if (!inst.oracle) {
            rep.failures.push_back("no-witness");
            continue;
        }
        std::vector<SparsePoly> gens = inst.pulled;
        gens.push_back(inst.oracle->delta - SparsePoly::constant(n, p, tstar));
        int in_deg = 0;
        for (const auto& g : gens) in_deg = std::max(in_deg, g.total_degree());

        BuchbergerStats st;
        const IdealBasis gb = buchberger(gens, MonomialOrder::lex(), &st);
        const ZeroDimResult z = solve_zero_dim(gb);
        rep.conic = inst.conic;
        rep.gb_leading = z.leading;
        rep.gb_size = gb.generators.size();
        rep.max_gb_degree = st.max_degree;
        rep.max_input_degree = in_deg;
        rep.witness_degree = inst.oracle->degree;
        if (!z.point_shaped) {
            std::string shape = "not-point-shaped: ";
            for (std::size_t i = 0; i < z.leading.size(); ++i) {
                if (i) shape += ", ";
                shape += "deg " + std::to_string(z.leading[i].degree());
            }
            rep.failures.push_back(shape);
            continue;
        }
        if (theta.evaluate(*z.point) != q) {
            rep.failures.push_back("forward-check-failed");
            continue;
        }
        rep.point = *z.point;
        rep.forward_check = true;
        return rep;
    }
    std::string msg = "no point recovered after " + std::to_string(rep.attempts) + " attempts:";
    for (const auto& f : rep.failures) msg += " [" + f + "]";
    throw Error(ErrorKind::RetriesExhausted, msg);
}

}  // namespace hlg

#endif  // HLG_INVERSION_HPP
