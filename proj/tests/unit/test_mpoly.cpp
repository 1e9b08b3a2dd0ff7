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

#include "hlg/mpoly.hpp"
#include "hlg/polyio.hpp"
#include "hlg/rng.hpp"
#include "oracles/oracles.hpp"

using namespace hlg;
using oracle::NaivePoly;

namespace {

SparsePoly P(const char* s, unsigned n, std::uint64_t p) { return parse_poly(s, n, p); }

SparsePoly random_poly(Rng& rng, unsigned n, std::uint64_t p, unsigned maxdeg, unsigned nterms) {
    std::vector<Term> t;
    for (unsigned k = 0; k < nterms; ++k) {
        Monomial m;
        unsigned left = static_cast<unsigned>(rng.below(maxdeg + 1));
        for (unsigned i = 0; i < n && left; ++i) {
            const unsigned e = static_cast<unsigned>(rng.below(left + 1));
            m.set(i, e);
            left -= e;
        }
        t.push_back({m, rng.below(p)});
    }
    return SparsePoly::from_terms(n, p, std::move(t));
}

PolyMap random_map(Rng& rng, unsigned in, unsigned out, std::uint64_t p, unsigned maxdeg) {
    std::vector<SparsePoly> c;
    for (unsigned i = 0; i < out; ++i) c.push_back(random_poly(rng, in, p, maxdeg, 1 + static_cast<unsigned>(rng.below(6))));
    return PolyMap(in, p, std::move(c));
}

FieldVector random_point(Rng& rng, unsigned n, std::uint64_t p) {
    FieldVector v(p, n);
    for (unsigned i = 0; i < n; ++i) v[i] = rng.below(p);
    return v;
}

}  // namespace

TEST(PolyArith, Basics) {
    const SparsePoly f = P("3*x1^2 + x2 + 5", 2, 7);
    EXPECT_EQ(f + SparsePoly::zero(2, 7), f);
    EXPECT_EQ(P("x1 + x2", 2, 7) * P("x1 - x2", 2, 7), P("x1^2 + 6*x2^2", 2, 7));
    EXPECT_EQ(P("x1 + 1", 1, 1801).pow(2), P("x1^2 + 2*x1 + 1", 1, 1801));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_THROW(f + P("x1", 3, 7), Error);
    EXPECT_THROW(f + P("x1", 2, 11), Error);
}

TEST(PolyArith, CanonicalOrderAndText) {
    // ascending total degree, ties by ascending exponent tuple
    const SparsePoly f = P("x1*x2 + x1^2 + x2^2 + 4 + x2 + x1", 2, 7);
    EXPECT_EQ(to_text(f), "4 + 1*x2 + 1*x1 + 1*x2^2 + 1*x1*x2 + 1*x1^2");
    EXPECT_EQ(to_text(SparsePoly::zero(3, 7)), "0");
    EXPECT_EQ(to_text(parse_poly("x1 y1 + 2 x2^2", 4, 7, VarNames::xy()), VarNames::xy()), "2*x2^2 + 1*x1*y1");
}

TEST(PolyArith, ParserErrors) {
    EXPECT_THROW(P("x4", 3, 7), Error);
    EXPECT_THROW(P("x1 + ", 3, 7), Error);
    EXPECT_THROW(P("w1", 3, 7), Error);
    EXPECT_THROW(P("", 3, 7), Error);
    EXPECT_EQ(P("-x1", 1, 7), P("6*x1", 1, 7));
    EXPECT_EQ(P("x_1 x_1 + 1800", 1, 1801), P("x1^2 - 1", 1, 1801));
}

TEST(PolyArith, TextRoundTripIsIdempotent) {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
        const SparsePoly f = random_poly(rng, n, 1801, 5, 10);
        const SparsePoly g = parse_poly(to_text(f), n, 1801);
        EXPECT_EQ(g, f);
        EXPECT_EQ(to_text(g), to_text(f));
    }
}

TEST(PolyArith, ProductAgreesWithSchoolbook) {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(4));
        const std::uint64_t p = trial % 3 ? 1801 : 7;
        const SparsePoly f = random_poly(rng, n, p, 4, 1 + static_cast<unsigned>(rng.below(12)));
        const SparsePoly g = random_poly(rng, n, p, 4, 1 + static_cast<unsigned>(rng.below(12)));
        EXPECT_TRUE((NaivePoly::from(f) * NaivePoly::from(g)).same_as(f * g));
        EXPECT_TRUE((NaivePoly::from(f) - NaivePoly::from(g)).same_as(f - g));
    }
}

TEST(PolyArith, TermBudget) {
    const SparsePoly f = P("x1 + x2 + x3 + 1", 3, 1801);
    ScopedTermBudget guard(50);
    try {
        (void)f.pow(6);
        FAIL();
    } catch (const TermBudgetExceeded& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TermBudgetExceeded);
        EXPECT_GT(e.partial_terms(), 50u);
    }
}

TEST(Evaluate, Examples) {
    EXPECT_EQ(SparsePoly::constant(3, 7, 5).evaluate(FieldVector(7, {1, 2, 3})), 5u);
    EXPECT_EQ(P("x1*x2", 2, 7).evaluate(FieldVector(7, {3, 5})), 1u);
    EXPECT_THROW(P("x1*x2", 2, 7).evaluate(FieldVector(7, {3})), Error);
}

TEST(TotalDegree, Examples) {
    EXPECT_EQ(total_degree(SparsePoly::zero(2, 7)), kZeroDegree);
    EXPECT_EQ(total_degree(SparsePoly::constant(2, 7, 3)), 0);
    EXPECT_EQ(total_degree(P("x1^2*x2 + x2", 2, 7)), 3);
}

TEST(BlockSwap, Examples) {
    const VarNames xy = VarNames::xy();
    EXPECT_EQ(block_swap(parse_poly("x1 y1", 2, 7, xy), 1), parse_poly("x1 y1", 2, 7, xy));
    EXPECT_EQ(block_swap(parse_poly("x1^2 y2", 4, 7, xy), 2), parse_poly("y1^2 x2", 4, 7, xy));
    EXPECT_THROW(block_swap(P("x1", 3, 7), 2), Error);
}

TEST(Expand, IdentityInner) {
    Rng rng(9);
    const PolyMap f = random_map(rng, 3, 2, 1801, 3);
    EXPECT_EQ(expand(f, PolyMap::identity(3, 1801)), f);
    EXPECT_EQ(expand(PolyMap::identity(2, 1801), f), f);
}

TEST(Expand, AgreesWithNaiveSubstitution) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
        const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
        const PolyMap inner = random_map(rng, m, k, 1801, 3);
        const PolyMap outer = random_map(rng, k, 2, 1801, 3);
        const PolyMap h = expand(outer, inner);
        const auto naive_inner = oracle::from_map(inner);
        for (unsigned i = 0; i < outer.out_dim(); ++i)
            EXPECT_TRUE(NaivePoly::from(outer[i]).substitute(naive_inner).same_as(h[i]));
    }
}

TEST(Expand, EvaluationCommutesWithComposition) {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
        const PolyMap g = random_map(rng, n, n, 1801, 3);
        const PolyMap f = random_map(rng, n, n, 1801, 3);
        const FieldVector x = random_point(rng, n, 1801);
        EXPECT_EQ(expand(f, g).evaluate(x), f.evaluate(g.evaluate(x)));
    }
}

TEST(Expand, Associative) {
    Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
        const PolyMap f = random_map(rng, n, n, 1801, 2);
        const PolyMap g = random_map(rng, n, n, 1801, 2);
        const PolyMap h = random_map(rng, n, n, 1801, 2);
        EXPECT_EQ(expand(f, expand(g, h)), expand(expand(f, g), h));
    }
}

TEST(Expand, DegreeBound) {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const PolyMap f = random_map(rng, 2, 2, 1801, 3);
        const PolyMap g = random_map(rng, 2, 2, 1801, 3);
        if (f.total_degree() < 1 || g.total_degree() < 1) continue;
        EXPECT_LE(expand(f, g).total_degree(), f.total_degree() * g.total_degree());
    }
}

TEST(Expand, ArityMismatch) {
    EXPECT_THROW(expand(PolyMap::identity(3, 7), PolyMap::identity(2, 7)), Error);
}
