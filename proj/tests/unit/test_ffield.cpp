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

#include "hlg/ffield.hpp"
#include "hlg/rng.hpp"
#include "oracles/oracles.hpp"

using namespace hlg;

TEST(FieldArith, Wraparound) {
    FieldElement a(1800, 1801), b(2, 1801);
    EXPECT_EQ((a + b).value(), 1u);
    EXPECT_EQ((FieldElement(0, 1801) * FieldElement(1234, 1801)).value(), 0u);
    EXPECT_EQ((FieldElement(0, 1801) - FieldElement(1, 1801)).value(), 1800u);
}

TEST(FieldArith, InverseOfFourMod1801) {
    // Frozen from the exhaustive search: 4 * 1351 = 5404 = 3 * 1801 + 1.
    EXPECT_EQ(oracle::inverse_by_search(4, 1801), 1351u);
    EXPECT_EQ(FieldElement(4, 1801).inv().value(), 1351u);
    EXPECT_EQ(rmul(4, 1351, 1801), 1u);
}

TEST(FieldArith, Errors) {
    EXPECT_THROW((void)(FieldElement(3, 7) / FieldElement(0, 7)), Error);
    try {
        (void)(FieldElement(3, 7) + FieldElement(3, 11));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ModulusMismatch);
    }
    EXPECT_THROW(checked_modulus(1800), Error);
    EXPECT_NO_THROW(checked_modulus(1801));
}

TEST(FieldArith, PrimalityAgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
    EXPECT_TRUE(is_prime(4294967291ULL));
    EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_FALSE(is_prime(4294967291ULL * 3ULL));
}

TEST(FieldArith, AxiomsOnRandomTriples) {
    Rng rng(7);
    for (std::uint64_t p : {2ULL, 7ULL, 1801ULL, 2305843009213693951ULL}) {
        for (int trial = 0; trial < 500; ++trial) {
            FieldElement a = FieldElement::from_residue(rng.below(p), p);
            FieldElement b = FieldElement::from_residue(rng.below(p), p);
            FieldElement c = FieldElement::from_residue(rng.below(p), p);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_EQ((a - b) + b, a);
            if (!a.is_zero()) {
                EXPECT_EQ((a * a.inv()).value(), 1u);
            }
        }
    }
}

TEST(MatSolve, Identity) {
    FieldVector v(7, {3, 5, 6});
    auto r = mat_solve(FieldMatrix::identity(7, 3), v);
    ASSERT_EQ(r.status, SolveStatus::Unique);
    EXPECT_EQ(r.solution, v);
}

TEST(MatSolve, TwoByTwoOverGF7) {
    FieldMatrix m(7, {{2, 5}, {6, 3}});
    auto r = mat_solve(m, FieldVector(7, {1, 0}));
    ASSERT_EQ(r.status, SolveStatus::Unique);
    EXPECT_EQ(r.solution, FieldVector(7, {6, 2}));
    EXPECT_EQ(m * r.solution, FieldVector(7, {1, 0}));
}

TEST(MatSolve, InconsistentAndUnderdetermined) {
    FieldMatrix sing(7, {{1, 2}, {2, 4}});
    EXPECT_EQ(mat_solve(sing, FieldVector(7, {1, 0})).status, SolveStatus::NoSolution);
    auto r = mat_solve(sing, FieldVector(7, {3, 6}));
    ASSERT_EQ(r.status, SolveStatus::Underdetermined);
    // Leftmost pivot, free column set to zero.
    EXPECT_EQ(r.solution, FieldVector(7, {3, 0}));
    ASSERT_EQ(r.kernel.size(), 1u);
    EXPECT_TRUE((sing * r.kernel[0]).is_zero());
    EXPECT_THROW(mat_solve(sing, FieldVector(7, {1, 2, 3})), Error);
}

TEST(MatInvert, ExampleLambda1) {
    FieldMatrix l1(1801, {{1, 0, 1}, {1, 1, 0}, {0, 1, 0}});
    FieldMatrix inv = mat_invert(l1);
    // (u, v, w) -> (v - w, w, u - v + w)
    EXPECT_EQ(inv, FieldMatrix(1801, {{0, 1, -1}, {0, 0, 1}, {1, -1, 1}}));
    EXPECT_EQ(inv * l1, FieldMatrix::identity(1801, 3));
    EXPECT_EQ(mat_invert(FieldMatrix::identity(1801, 3)), FieldMatrix::identity(1801, 3));
    try {
        mat_invert(FieldMatrix(1801, 3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Singular);
    }
}

TEST(MatProperties, RandomSolveAndInvert) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t p = trial % 2 ? 7 : 1801;
        const unsigned rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        FieldMatrix m(p, rows, cols);
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned j = 0; j < cols; ++j) m(i, j) = rng.below(p);
        FieldVector rhs(p, rows);
        for (unsigned i = 0; i < rows; ++i) rhs[i] = rng.below(p);
        auto r = mat_solve(m, rhs);
        if (r.ok()) {
            EXPECT_EQ(m * r.solution, rhs);
            for (const auto& k : r.kernel) EXPECT_TRUE((m * k).is_zero());
            EXPECT_EQ(r.kernel.size(), cols - rank(m));
        }
        if (rows == cols && rank(m) == rows) {
            FieldMatrix inv = mat_invert(m);
            EXPECT_EQ(inv * m, FieldMatrix::identity(p, rows));
            EXPECT_EQ(m * inv, FieldMatrix::identity(p, rows));
        }
    }
}
