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

#include "hlg/fixtures.hpp"
#include "hlg/inversion.hpp"
#include "hlg/polyio.hpp"

using namespace hlg;

namespace {

constexpr std::uint64_t kP = 1801;

FieldVector random_point(Rng& rng, std::uint64_t p, unsigned n) {
    FieldVector x(p, n);
    for (unsigned i = 0; i < n; ++i) x[i] = rng.below(p);
    return x;
}

}  // namespace

TEST(Conic, SmallExample) {
    const ConicFrame c = build_conic(FieldVector(7, {0, 0, 0}), FieldVector(7, {1, 1, 0}), FieldVector(7, {0, 1, 0}), 2);
    EXPECT_EQ(c.a, FieldVector(7, {2, 5, 0}));
    EXPECT_EQ(c.b, FieldVector(7, {6, 3, 0}));
    EXPECT_EQ(c.sigma.evaluate(FieldVector(7, {2})), FieldVector(7, {0, 1, 0}));
    EXPECT_EQ(c.u, parse_poly("6 x1 + 2 x2", 3, 7));
    EXPECT_EQ(c.v, parse_poly("4 x1 + 4 x2", 3, 7));
    ASSERT_EQ(c.plane_eqs.size(), 1u);
    EXPECT_EQ(c.plane_eqs[0], parse_poly("x3", 3, 7));
    for (const auto& g : c.generators()) EXPECT_TRUE(compose(g, c.sigma).is_zero());
}

TEST(Conic, Collinear) {
    try {
        build_conic(FieldVector(7, {0, 0}), FieldVector(7, {1, 1}), FieldVector(7, {2, 2}), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateConic);
    }
    EXPECT_THROW(build_conic(FieldVector(7, {0, 0}), FieldVector(7, {1, 0}), FieldVector(7, {0, 1}), 1), Error);
}

TEST(Conic, RandomFrames) {
    Rng rng(1);
    for (int k = 0; k < 50; ++k) {
        const unsigned n = 2 + static_cast<unsigned>(rng.below(3));
        const FieldVector q0 = random_point(rng, kP, n), q1 = random_point(rng, kP, n), q = random_point(rng, kP, n);
        const Residue ts = rng.between(2, kP - 1);
        const ConicFrame c = build_conic(q0, q1, q, ts);
        EXPECT_EQ(c.sigma.evaluate(FieldVector(kP, {0})), q0);
        EXPECT_EQ(c.sigma.evaluate(FieldVector(kP, {1})), q1);
        EXPECT_EQ(c.sigma.evaluate(FieldVector(kP, std::vector<Residue>{ts})), q);
        EXPECT_EQ(c.plane_eqs.size(), n - 2);
        EXPECT_TRUE(compose(c.u, c.sigma) == parse_poly("x1", 1, kP));
        for (const auto& g : c.generators()) EXPECT_TRUE(compose(g, c.sigma).is_zero());
    }
}

TEST(Oracle, ExactWitness) {
    Rng rng(2);
    const ConicFrame c = build_conic(random_point(rng, kP, 3), random_point(rng, kP, 3), random_point(rng, kP, 3), 5);
    EXPECT_EQ(oracle_exact(PolyMap::identity(3, kP), c).delta, c.u);
    const TameAutomorphism aff = tame_random(kP, 2, 3, 4, 0.0);
    EXPECT_EQ(oracle_exact(aff.forward(), c).delta.total_degree(), 1);
    for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
        const TameAutomorphism th = fixtures::example1_theta(conv);
        const DlogWitness w = oracle_exact(th.forward(), c);
        EXPECT_LE(w.degree, 2);
        EXPECT_EQ(w.dtype, DlogType::Type4);
        EXPECT_EQ(compose(w.delta, expand(th.inverse(), c.sigma)), parse_poly("x1", 1, kP));
    }
}

TEST(Oracle, Interpolation) {
    std::vector<std::pair<FieldVector, Residue>> line;
    for (Residue t = 0; t < 10; ++t) line.emplace_back(FieldVector(kP, std::vector<Residue>{t, 0, 0}), t);
    const auto w = oracle_interpolate(line, 3, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->delta, parse_poly("x1", 3, kP));
    EXPECT_EQ(w->dtype, DlogType::Type3);
    EXPECT_FALSE(oracle_interpolate(line, 3, 0));

    // pulled-back conic for the worked example, dmax = 2
    Rng rng(3);
    const TameAutomorphism th = fixtures::example1_theta(Convention::Lambda2First);
    const ConicFrame c = build_conic(random_point(rng, kP, 3), random_point(rng, kP, 3), random_point(rng, kP, 3), 9);
    const PolyMap x_of_t = expand(th.inverse(), c.sigma);
    std::vector<std::pair<FieldVector, Residue>> s;
    for (Residue t = 0; t < 20; ++t) s.emplace_back(x_of_t.evaluate(FieldVector(kP, std::vector<Residue>{t})), t);
    const auto wi = oracle_interpolate(s, 3, 2);
    ASSERT_TRUE(wi);
    const SparsePoly exact = oracle_exact(th.forward(), c).delta;
    for (int k = 0; k < 100; ++k) {
        const Residue t = rng.below(kP);
        const FieldVector x = x_of_t.evaluate(FieldVector(kP, std::vector<Residue>{t}));
        EXPECT_EQ(wi->delta.evaluate(x), t);
        EXPECT_EQ(exact.evaluate(x), t);
    }
}

TEST(Invert, IdentityAndAffine) {
    Rng rng(4);
    const PolyMap id = PolyMap::identity(3, kP);
    const FieldVector q = random_point(rng, kP, 3);
    EXPECT_EQ(invert(id, q, exact_provider(id), 1).point, q);

    const TameAutomorphism aff = tame_random(kP, 1, 3, 8, 0.0, Convention::Lambda2First, true);
    const FieldVector qa = random_point(rng, kP, 3);
    const InversionReport r = invert(aff.forward(), qa, exact_provider(aff.forward()), 2);
    EXPECT_TRUE(r.forward_check);
    EXPECT_EQ(r.point, aff.inverse().evaluate(qa));
}

TEST(Invert, WorkedExampleAndRandomTame) {
    Rng rng(5);
    for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
        const TameAutomorphism th = fixtures::example1_theta(conv);
        const FieldVector pre = random_point(rng, kP, 3);
        const InversionReport r = invert(th.forward(), th.forward().evaluate(pre), exact_provider(th.forward()), 3);
        EXPECT_EQ(r.point, pre);
        EXPECT_LE(r.max_input_degree, 2 * th.forward().total_degree());
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const TameAutomorphism th = tame_random(kP, 2, 3, 100 + seed);
        const FieldVector pre = random_point(rng, kP, 3);
        const InversionReport r = invert(th.forward(), th.forward().evaluate(pre), exact_provider(th.forward()), seed);
        EXPECT_EQ(r.point, pre);
        EXPECT_EQ(r.gb_size, 3u);
    }
}

TEST(Invert, InterpolatingAdversaryAndTwoDimensions) {
    const TameAutomorphism th = tame_random(kP, 2, 2, 12);
    Rng rng(6);
    const FieldVector pre = random_point(rng, kP, 2);
    const InversionReport r = invert(th.forward(), th.forward().evaluate(pre), interpolating_provider(th.inverse(), 2), 4);
    EXPECT_EQ(r.point, pre);
    ASSERT_TRUE(r.conic);
    EXPECT_TRUE(r.conic->plane_eqs.empty());
}

TEST(Invert, RetriesExhausted) {
    const PolyMap id = PolyMap::identity(3, kP);
    const OracleProvider none = [](const PullbackInstance&) { return std::optional<DlogWitness>{}; };
    try {
        invert(id, FieldVector(kP, {1, 2, 3}), none, 1, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RetriesExhausted);
        EXPECT_NE(std::string(e.what()).find("no-witness"), std::string::npos);
    }
}
