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

#include <gtest/gtest.h>

#include <cmath>

#include "hlg/autos.hpp"
#include "hlg/fixtures.hpp"
#include "hlg/polyio.hpp"
#include "oracles/oracles.hpp"

using namespace hlg;

namespace {

constexpr std::uint64_t kP = 1801;

PolyMap map_of(std::initializer_list<const char*> comps, unsigned n, std::uint64_t p, const VarNames& names = {}) {
    std::vector<SparsePoly> c;
    for (const char* s : comps) c.push_back(parse_poly(s, n, p, names));
    return PolyMap(n, p, std::move(c));
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST(TriInvert, IdentityShifts) {
    EXPECT_TRUE(tri_invert(TriangularMap::identity(4, kP)).is_identity());
}

TEST(TriInvert, WorkedExample) {
    const TriangularMap tau = fixtures::example1_tau();
    const PolyMap inv = tri_invert(tau);
    EXPECT_EQ(inv, map_of({"x1 - 1", "x2 - x1 + 1", "x3 - x1*x2 + x2"}, 3, kP));
    // independent check: naive substitution both ways
    const auto naive_tau = oracle::from_map(tau.as_map());
    const auto naive_inv = oracle::from_map(inv);
    for (unsigned i = 0; i < 3; ++i) {
        EXPECT_TRUE(oracle::NaivePoly::from(tau.as_map()[i]).substitute(naive_inv).same_as(SparsePoly::variable(3, kP, i)));
        EXPECT_TRUE(oracle::NaivePoly::from(inv[i]).substitute(naive_tau).same_as(SparsePoly::variable(3, kP, i)));
    }
}

TEST(TriInvert, RejectsMalformedShifts) {
    EXPECT_THROW(TriangularMap({parse_poly("x1", 2, kP), parse_poly("0", 2, kP)}, 1), Error);
    EXPECT_THROW(TriangularMap({parse_poly("0", 2, kP), parse_poly("x1^3", 2, kP)}, 2), Error);
}

TEST(TriInvert, DegreeBound) {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned d = 1; d <= 3; ++d)
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const TameAutomorphism t = tame_random(kP, d, n, seed);
                const PolyMap inv = tri_invert(t.tau());
                EXPECT_LE(inv.total_degree(), ipow(static_cast<int>(d), static_cast<int>(n) - 1));
                EXPECT_TRUE(expand(t.tau().as_map(), inv).is_identity());
            }
}

TEST(TameBuild, IdentityPieces) {
    const TameAutomorphism t = tame_build(AffineLinearMap::identity(3, kP), TriangularMap::identity(3, kP),
                                          AffineLinearMap::identity(3, kP));
    EXPECT_TRUE(t.forward().is_identity());
    EXPECT_TRUE(t.inverse().is_identity());
}

TEST(TameBuild, WorkedExampleBothConventions) {
    const PolyMap rho = fixtures::example1_immersion().as_map();
    const VarNames t = VarNames::single("t");
    EXPECT_EQ(expand(fixtures::example1_theta(Convention::Lambda2First).forward(), rho),
              map_of({"8 t^2 + 5 t", "6 t + 2", "4 t + 1"}, 1, kP, t));
    EXPECT_EQ(expand(fixtures::example1_theta(Convention::Lambda1First).forward(), rho),
              map_of({"8 t^2 + 9 t - 1", "8 t^2 + 7 t + 1", "4 t"}, 1, kP, t));
}

TEST(TameBuild, ForwardMatchesPiecewiseEvaluation) {
    Rng rng(7);
    for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
        const TameAutomorphism t = tame_random(kP, 2, 3, 11, 1.0, conv, true);
        for (int k = 0; k < 100; ++k) {
            FieldVector x(kP, 3);
            for (unsigned i = 0; i < 3; ++i) x[i] = rng.below(kP);
            const auto& first = conv == Convention::Lambda2First ? t.lambda2() : t.lambda1();
            const auto& last = conv == Convention::Lambda2First ? t.lambda1() : t.lambda2();
            EXPECT_EQ(t.forward().evaluate(x), last.apply(t.tau().as_map().evaluate(first.apply(x))));
            EXPECT_EQ(t.inverse().evaluate(t.forward().evaluate(x)), x);
        }
    }
}

TEST(TameBuild, SingularLinearPart) {
    EXPECT_THROW(AffineLinearMap(FieldMatrix(kP, {{1, 2}, {2, 4}})), Error);
}

TEST(TameRandom, Deterministic) {
    EXPECT_EQ(tame_random(kP, 2, 3, 42), tame_random(kP, 2, 3, 42));
    EXPECT_EQ(tame_random(kP, 2, 3, 42).forward(), tame_random(kP, 2, 3, 42).forward());
    EXPECT_FALSE(tame_random(kP, 2, 3, 42) == tame_random(kP, 2, 3, 43));
}

TEST(TameRandom, ZeroSparsityIsAffine) {
    const TameAutomorphism t = tame_random(kP, 3, 4, 5, 0.0);
    EXPECT_EQ(t.forward().total_degree(), 1);
    EXPECT_EQ(t.tau(), TriangularMap::identity(4, kP, 3));
}

TEST(TameRandom, InverseComposesToIdentity) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TameAutomorphism t = tame_random(kP, 2, 3, seed);
        EXPECT_TRUE(expand(t.forward(), t.inverse()).is_identity());
        EXPECT_TRUE(expand(t.inverse(), t.forward()).is_identity());
    }
}

TEST(Keyspace, Formula) {
    const KeyspaceReport a = keyspace(2, 1, 2);
    EXPECT_EQ(a.lower_bound_exponent, 7u);
    EXPECT_DOUBLE_EQ(a.entropy_bits_lower_bound, 7.0);
    const KeyspaceReport b = keyspace(3, 2, 3);
    EXPECT_EQ(b.triangular_count_exponent, 10u);
    EXPECT_EQ(b.lower_bound_exponent, 16u);
    EXPECT_NEAR(b.entropy_bits_lower_bound, 16 * std::log2(3.0), 1e-12);
    EXPECT_EQ(keyspace(5, 0, 4).triangular_count_exponent, 4u);
    EXPECT_FALSE(a.published_formula_note.empty());
}

TEST(Keyspace, EnumerationMatchesFormula) {
    const KeyspaceEnumeration e = enumerate_keyspace(2, 1, 2);
    EXPECT_EQ(e.pairs, 1ULL << keyspace(2, 1, 2).lower_bound_exponent);
    EXPECT_LE(e.immersion_pairs, e.pairs);
    EXPECT_LE(e.group_structures, e.immersion_pairs);
}

TEST(Convention, Parse) {
    EXPECT_EQ(parse_convention("lambda1-first"), Convention::Lambda1First);
    EXPECT_EQ(to_string(parse_convention("lambda2-first")), "lambda2-first");
    EXPECT_THROW(parse_convention("both"), Error);
}
