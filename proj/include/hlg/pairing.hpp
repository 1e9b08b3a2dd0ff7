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

#ifndef HLG_PAIRING_HPP
#define HLG_PAIRING_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "mpoly.hpp"
#include "rng.hpp"

namespace hlg {

inline constexpr std::size_t kPairingTermBudget = 1'000'000;

/// k-linear map from the source group to the target group: the parameters
/// of the k inputs are multiplied and the product is placed on the target
/// curve.
class MultilinearPairing {
public:
    MultilinearPairing() = default;
    MultilinearPairing(unsigned k, Trapdoor source, Trapdoor target)
        : k_(k), source_(std::move(source)), target_(std::move(target)) {
        if (k_ < 2) throw Error(ErrorKind::InvalidInput, "pairing arity must be at least 2");
        require_same_modulus(source_.modulus(), target_.modulus());
    }

    unsigned arity() const noexcept { return k_; }
    const Trapdoor& source() const noexcept { return source_; }
    const Trapdoor& target() const noexcept { return target_; }
    std::uint64_t modulus() const noexcept { return source_.modulus(); }

    friend bool operator==(const MultilinearPairing&, const MultilinearPairing&) = default;

private:
    unsigned k_ = 2;
    Trapdoor source_;
    Trapdoor target_;
};

inline GroupElement pair_eval(const MultilinearPairing& pr, const std::vector<GroupElement>& points) {
    if (points.size() != pr.arity()) throw Error(ErrorKind::ArityMismatch, "pairing expects exactly k points");
    const std::uint64_t p = pr.modulus();
    Residue prod = 1;
    for (const auto& x : points) {
        if (x.coords.size() != pr.source().dim()) throw Error(ErrorKind::ArityMismatch, "point has the wrong dimension");
        prod = rmul(prod, pr.source().param(x.coords), p);
    }
    return {pr.target().point(prod)};
}

/// The pairing as k*n-variable polynomials: target curve evaluated at the
/// product of the source parameter maps, one variable block per slot.
inline PolyMap pair_expand(const MultilinearPairing& pr, std::size_t budget = kPairingTermBudget) {
    ScopedTermBudget guard(budget);
    const unsigned n = pr.source().dim();
    const unsigned nv = pr.arity() * n;
    SparsePoly prod = SparsePoly::constant(nv, pr.modulus(), 1);
    for (unsigned j = 0; j < pr.arity(); ++j) prod = prod * pr.source().tmap().shifted(nv, j * n);
    return expand(pr.target().curve(), PolyMap(nv, pr.modulus(), {prod}));
}

struct MultilinearityWitness {
    unsigned trial = 0;
    unsigned slot = 0;
    std::vector<Residue> params;  ///< source parameters of the k inputs
    Residue extra = 0;            ///< parameter of the added Q in `slot`
};

struct MultilinearityReport {
    unsigned trials = 0;
    unsigned checks = 0;
    unsigned failures = 0;
    std::vector<MultilinearityWitness> witnesses;  ///< first few failures
};

/// Slot additivity: mu(.., P_i + Q_i, ..) = mu(.., P_i, ..) + mu(.., Q_i, ..).
/// Source additions use the trapdoor; target additions use the target trapdoor.
inline MultilinearityReport multilinearity_check(const MultilinearPairing& pr, unsigned trials, std::uint64_t seed) {
    const std::uint64_t p = pr.modulus();
    const Group src(pr.source(), false);
    const Group dst(pr.target(), false);
    Rng rng(seed);
    MultilinearityReport rep;
    rep.trials = trials;
    for (unsigned tr = 0; tr < trials; ++tr) {
        std::vector<Residue> params(pr.arity());
        std::vector<GroupElement> pts;
        for (auto& s : params) {
            s = rng.below(p);
            pts.push_back(element_from_param(pr.source(), s));
        }
        for (unsigned slot = 0; slot < pr.arity(); ++slot) {
            const Residue q = rng.below(p);
            const GroupElement qe = element_from_param(pr.source(), q);
            auto with = [&](const GroupElement& e) {
                auto v = pts;
                v[slot] = e;
                return pair_eval(pr, v);
            };
            const GroupElement lhs = with(src.add(pts[slot], qe, Mode::Trapdoor));
            const GroupElement rhs = dst.add(pair_eval(pr, pts), with(qe), Mode::Trapdoor);
            ++rep.checks;
            if (lhs != rhs) {
                ++rep.failures;
                if (rep.witnesses.size() < 10) rep.witnesses.push_back({tr, slot, params, q});
            }
        }
    }
    return rep;
}

}  // namespace hlg

#endif  // HLG_PAIRING_HPP
