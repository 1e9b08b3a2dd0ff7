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

#ifndef HLG_SELFTEST_HPP
#define HLG_SELFTEST_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "autos.hpp"
#include "ffield.hpp"
#include "groebner.hpp"
#include "group.hpp"
#include "inversion.hpp"
#include "mpoly.hpp"
#include "pairing.hpp"
#include "polyio.hpp"
#include "rng.hpp"
#include "serialize.hpp"
#include "verify.hpp"

// Sampled property checks of every module, sized to run in a few seconds.

namespace hlg {

struct SelftestCase {
    std::string module;
    std::string property;
    unsigned checks = 0;
    unsigned failures = 0;
    std::string error;  ///< set when the check threw
};

namespace detail {

inline FieldVector random_vec(Rng& rng, std::uint64_t p, unsigned n) {
    FieldVector x(p, n);
    for (unsigned i = 0; i < n; ++i) x[i] = rng.below(p);
    return x;
}

}  // namespace detail

inline std::vector<SelftestCase> run_selftest(std::uint64_t seed = 1) {
    constexpr std::uint64_t p = 1801;
    std::vector<SelftestCase> out;
    auto run = [&](const char* module, const char* property, const std::function<void(SelftestCase&, Rng&)>& body) {
        SelftestCase c{module, property, 0, 0, {}};
        Rng rng(seed ^ fixtures::fnv1a(property));
        try {
            body(c, rng);
        } catch (const std::exception& e) {
            c.error = e.what();
            ++c.failures;
        }
        out.push_back(std::move(c));
    };
    auto expect = [](SelftestCase& c, bool ok) {
        ++c.checks;
        if (!ok) ++c.failures;
    };

    run("ffield", "field axioms", [&](SelftestCase& c, Rng& rng) {
        for (int k = 0; k < 500; ++k) {
            const FieldElement a(static_cast<std::int64_t>(rng.below(p)), p), b(static_cast<std::int64_t>(rng.below(p)), p),
                e(static_cast<std::int64_t>(rng.below(p)), p);
            expect(c, (a + b) * e == a * e + b * e && (a * b) * e == a * (b * e));
            if (!a.is_zero()) expect(c, (a * a.inv()).value() == 1);
        }
    });
    run("ffield", "solve and invert", [&](SelftestCase& c, Rng& rng) {
        for (int k = 0; k < 100; ++k) {
            const FieldMatrix m = random_invertible(rng, p, 4);
            const FieldVector b = detail::random_vec(rng, p, 4);
            const SolveResult s = mat_solve(m, b);
            expect(c, s.status == SolveStatus::Unique && m * s.solution == b);
            expect(c, m * mat_invert(m) == FieldMatrix::identity(p, 4));
        }
    });
    run("mpoly", "expand commutes with evaluation", [&](SelftestCase& c, Rng& rng) {
        for (std::uint64_t k = 0; k < 50; ++k) {
            const TameAutomorphism f = tame_random(p, 2, 3, rng.next()), g = tame_random(p, 2, 3, rng.next());
            const PolyMap h = expand(f.forward(), g.forward());
            const FieldVector x = detail::random_vec(rng, p, 3);
            expect(c, h.evaluate(x) == f.forward().evaluate(g.forward().evaluate(x)));
        }
    });
    run("mpoly", "text round trip", [&](SelftestCase& c, Rng& rng) {
        for (int k = 0; k < 50; ++k) {
            const SparsePoly f = tame_random(p, 3, 3, rng.next()).forward()[2];
            expect(c, parse_poly(to_text(f), 3, p) == f);
        }
    });
    run("autos", "inverse composes to identity", [&](SelftestCase& c, Rng& rng) {
        for (unsigned n = 2; n <= 4; ++n)
            for (unsigned d = 1; d <= 3; ++d) {
                const TameAutomorphism t = tame_random(p, d, n, rng.next());
                int bound = 1;
                for (unsigned i = 1; i < n; ++i) bound *= static_cast<int>(d);
                expect(c, tri_invert(t.tau()).total_degree() <= bound);
                // symbolic composition only where the inverse stays small
                if (bound <= 4)
                    expect(c, expand(t.forward(), t.inverse()).is_identity() && expand(t.inverse(), t.forward()).is_identity());
                for (int k = 0; k < 20; ++k) {
                    const FieldVector x = detail::random_vec(rng, p, n);
                    expect(c, t.inverse().evaluate(t.forward().evaluate(x)) == x);
                }
            }
    });
    run("autos", "key space enumeration", [&](SelftestCase& c, Rng&) {
        expect(c, enumerate_keyspace(2, 1, 2).pairs == (1ULL << keyspace(2, 1, 2).lower_bound_exponent));
    });
    run("group", "axioms and mode agreement", [&](SelftestCase& c, Rng& rng) {
        for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
            const Trapdoor t = trapdoor_random(p, 3, 2, rng.next(), 1.0, conv);
            const Group g(t);
            for (int k = 0; k < 100; ++k) {
                const GroupElement a{t.point(rng.below(p))}, b{t.point(rng.below(p))}, e{t.point(rng.below(p))};
                const GroupElement ab = g.add(a, b, Mode::Law);
                expect(c, ab == g.add(a, b, Mode::Trapdoor) && member(t, ab.coords));
                expect(c, ab == g.add(b, a, Mode::Law));
                expect(c, g.add(ab, e, Mode::Law) == g.add(a, g.add(b, e, Mode::Law), Mode::Law));
                expect(c, g.add(a, g.neg(a, Mode::Law), Mode::Law) == g.identity());
            }
            for (const auto& comp : g.public_part().law->components()) expect(c, block_swap(comp, 3) == comp);
        }
    });
    run("group", "order and dlog", [&](SelftestCase& c, Rng& rng) {
        const Trapdoor t = trapdoor_random(p, 3, 2, rng.next());
        const Group g(t, false);
        for (int k = 0; k < 50; ++k) {
            expect(c, g.scalar_mul({t.point(rng.below(p))}, p, Mode::Trapdoor) == g.identity());
            const Residue e = rng.below(p);
            expect(c, dlog_trapdoor(t, g.scalar_mul(g.generator(), e, Mode::Trapdoor), g.generator()) == e);
        }
    });
    run("pairing", "multilinearity", [&](SelftestCase& c, Rng& rng) {
        const MultilinearPairing pr(3, trapdoor_random(p, 3, 2, rng.next()), trapdoor_random(p, 3, 2, rng.next()));
        const MultilinearityReport r = multilinearity_check(pr, 100, rng.next());
        c.checks += r.checks;
        c.failures += r.failures;
    });
    run("pairing", "expanded form agrees with evaluation", [&](SelftestCase& c, Rng& rng) {
        const Example2Verdict v = verify_example2(Convention::Lambda2First, 50, rng.next());
        c.checks += v.eval_trials;
        c.failures += v.eval_mismatches;
    });
    run("groebner", "reduced basis invariants", [&](SelftestCase& c, Rng& rng) {
        for (int k = 0; k < 20; ++k) {
            const TameAutomorphism t = tame_random(7, 2, 2, rng.next());
            std::vector<SparsePoly> f{t.forward()[0] - SparsePoly::constant(2, 7, rng.below(7)), t.forward()[1]};
            const IdealBasis b = buchberger(f);
            for (const auto& g : f) expect(c, normal_form(g, b).is_zero());
            std::reverse(f.begin(), f.end());
            expect(c, buchberger(f) == b);
        }
    });
    run("inversion", "recovers preimages", [&](SelftestCase& c, Rng& rng) {
        for (int k = 0; k < 10; ++k) {
            const TameAutomorphism t = tame_random(p, 2, 3, rng.next());
            const FieldVector pre = detail::random_vec(rng, p, 3);
            const InversionReport r = invert(t.forward(), t.forward().evaluate(pre), exact_provider(t.forward()), rng.next());
            expect(c, r.forward_check && r.point == pre);
        }
    });
    run("cli", "json round trip", [&](SelftestCase& c, Rng& rng) {
        const Trapdoor t = trapdoor_random(p, 3, 2, rng.next());
        const std::string s = io::dump(io::to_json(t));
        expect(c, io::dump(io::to_json(io::trapdoor_from_json(io::Json::parse(s)))) == s);
        const std::string g = io::dump(io::to_json(make_public(t)));
        expect(c, io::dump(io::to_json(io::public_from_json(io::Json::parse(g)))) == g);
    });
    run("cli", "worked-example structure", [&](SelftestCase& c, Rng&) {
        for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
            const Example1Verdict v = verify_example1(conv);
            expect(c, v.listings_intact && v.z3_structural() && v.law_symmetric);
            expect(c, verify_example2(conv, 10).profile_ok());
        }
    });
    return out;
}

}  // namespace hlg

#endif  // HLG_SELFTEST_HPP
