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
#include "hlg/polyio.hpp"
#include "hlg/serialize.hpp"

using namespace hlg;

namespace {

constexpr std::uint64_t kP = 1801;

}  // namespace

TEST(Point, Parse) {
    EXPECT_EQ(io::parse_point("1,2,3", kP), FieldVector(kP, {1, 2, 3}));
    EXPECT_EQ(io::parse_point("-1, 1802", kP), FieldVector(kP, {1800, 1}));
    EXPECT_THROW(io::parse_point("1,x", kP), Error);
    EXPECT_THROW(io::parse_point("", kP), Error);
    try {
        io::parse_point("1,2", kP, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
    }
}

TEST(Poly, RoundTrip) {
    const SparsePoly f = parse_poly("3*x1^2*x2 - x3 + 7", 3, kP);
    const io::Json j = io::to_json(f);
    EXPECT_EQ(j["p"], kP);
    EXPECT_EQ(j["nvars"], 3);
    EXPECT_EQ(io::poly_from_json(j), f);
    EXPECT_EQ(io::poly_from_json(io::to_json(SparsePoly::zero(2, 7))), SparsePoly::zero(2, 7));
}

TEST(Poly, RejectsMalformed) {
    io::Json j = io::to_json(parse_poly("x1", 2, 7));
    j["terms"][0]["e"] = {1};
    EXPECT_THROW(io::poly_from_json(j), Error);
    EXPECT_THROW(io::poly_from_json(io::Json::parse(R"({"p": 8, "nvars": 1, "terms": []})")), Error);
    EXPECT_THROW(io::poly_from_json(io::Json::parse(R"({"nvars": 1, "terms": []})")), Error);
}

TEST(Trapdoor, RoundTripBothConventions) {
    for (auto conv : {Convention::Lambda2First, Convention::Lambda1First}) {
        const Trapdoor t = trapdoor_random(kP, 3, 2, 17, 0.7, conv);
        const io::Json j = io::to_json(t);
        const Trapdoor back = io::trapdoor_from_json(io::Json::parse(io::dump(j)));
        EXPECT_EQ(io::dump(io::to_json(back)), io::dump(j));
        EXPECT_EQ(back.theta().forward(), t.theta().forward());
        EXPECT_EQ(back.curve(), t.curve());
        EXPECT_EQ(back.tmap(), t.tmap());
    }
    const Trapdoor w = fixtures::example1_trapdoor(Convention::Lambda1First, 0);
    EXPECT_EQ(io::trapdoor_from_json(io::to_json(w)).immersion().retraction_index(), 0u);
}

TEST(PublicGroup, RoundTrip) {
    const CurveGroup g = make_public(trapdoor_random(kP, 3, 2, 4), true);
    const CurveGroup back = io::public_from_json(io::to_json(g));
    EXPECT_EQ(back.generator, g.generator);
    EXPECT_EQ(back.identity, g.identity);
    ASSERT_TRUE(back.law && back.negation);
    EXPECT_EQ(*back.law, *g.law);
    EXPECT_EQ(*back.negation, *g.negation);
    const CurveGroup bare = io::public_from_json(io::to_json(make_public(trapdoor_random(kP, 3, 2, 4), false)));
    EXPECT_FALSE(bare.law);
}

TEST(Pairing, RoundTrip) {
    const MultilinearPairing pr(3, trapdoor_random(kP, 2, 2, 1), trapdoor_random(kP, 2, 1, 2));
    const MultilinearPairing back = io::pairing_from_json(io::to_json(pr));
    EXPECT_EQ(back.arity(), 3u);
    EXPECT_EQ(back.source().curve(), pr.source().curve());
    EXPECT_EQ(back.target().curve(), pr.target().curve());
}

TEST(Basis, RoundTrip) {
    const IdealBasis b = buchberger({parse_poly("x1^2 - x2", 2, 7), parse_poly("x2^2 - 1", 2, 7)}, MonomialOrder::grevlex());
    const IdealBasis back = io::basis_from_json(io::to_json(b));
    EXPECT_EQ(back.generators, b.generators);
    EXPECT_EQ(back.order.kind, b.order.kind);
    EXPECT_EQ(back.reduced, b.reduced);
}

TEST(Dump, StableFormatting) {
    const io::Json j{{"b", 1}, {"a", {1, 2}}};
    EXPECT_EQ(io::dump(j), "{\n  \"b\": 1,\n  \"a\": [\n    1,\n    2\n  ]\n}\n");
}
