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

#ifndef HLG_FIXTURES_HPP
#define HLG_FIXTURES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>

#include "autos.hpp"
#include "group.hpp"
#include "polyio.hpp"

// Reference data for the GF(1801), n = 3 worked example: the curve
// t -> (t, t - 1, t + 1), two linear parts, one triangular map, the claimed
// generator (7, 7, 4), the three group-law components as listed, and the
// first output of the trilinear form built on top of it.

namespace hlg::fixtures {

inline constexpr std::uint64_t kP = 1801;

inline LinearImmersion example1_immersion(std::optional<unsigned> retraction_index = std::nullopt) {
    return LinearImmersion(FieldVector(kP, {1, 1, 1}), FieldVector(kP, {0, -1, 1}), retraction_index);
}

inline AffineLinearMap example1_lambda1() { return AffineLinearMap(FieldMatrix(kP, {{1, 0, 1}, {1, 1, 0}, {0, 1, 0}})); }
inline AffineLinearMap example1_lambda2() { return AffineLinearMap(FieldMatrix(kP, {{0, 1, 1}, {1, 0, 1}, {0, 1, 0}})); }

inline TriangularMap example1_tau() {
    return TriangularMap({parse_poly("1", 3, kP), parse_poly("x1", 3, kP), parse_poly("x1*x2 + x1^2", 3, kP)}, 2);
}

inline TameAutomorphism example1_theta(Convention convention) {
    return tame_build(example1_lambda1(), example1_tau(), example1_lambda2(), convention);
}

inline Trapdoor example1_trapdoor(Convention convention, std::optional<unsigned> retraction_index = std::nullopt) {
    return Trapdoor(example1_immersion(retraction_index), Automorphism(example1_theta(convention)), 2);
}

inline FieldVector example1_generator() { return FieldVector(kP, {7, 7, 4}); }

/// The second group: the first coordinate axis with theta = identity.
inline Trapdoor example2_target() {
    return Trapdoor(LinearImmersion(FieldVector(kP, {1, 0, 0}), FieldVector(kP, 3)), Automorphism::identity(3, kP), 1);
}

inline constexpr unsigned kExample2Arity = 3;

// Listings, whitespace-normalized, with FNV-1a checksums of the text.
inline constexpr std::string_view kZ1Text =
    "1799 + 1791 x1 + 5 x2 + 10 x3 + 32 x1 x2 y1 y2 + 1769 x1 y3 + 16 x1 y1^2 + 16 x1 y2^2 + 1785 x2 y1 +"
    " 8 x2 y2 + 16 x2 y3 + 1793 x2 y1^2 + 1793 x2 y2^2 + 1769 x3 y1 + 16 x3 y2 + 32 x3 y3 + 1785 x3 y1^2 "
    "+ 1785 x3 y2^2 + 16 x1^2 y1 + 1793 x1^2 y2 + 1785 x1^2 y3 + 8 x1^2 y1^2 + 8 x1^2 y2^2 + 16 x2^2 y1 +"
    " 1793 x2^2 y2 + 1785 x2^2 y3 + 24 x1^2 x2^2 + 1785 x1^3 x2 + 1785 x1 x2^3 + 1793 x1^3 x3 + 1777 y2^2"
    " y3 + 1785 y2 y3^2 + 32 x1 y1 + 1785 x1 y2 + 1774 x1 x3 + 11 x2 x3 + 1795 y1 y2 + 16 x1 x2 y1 y3 + "
    "1785 x1 x2 y2 y3 + 16 x1 x3 y1 y2 + 8 x1 x3 y1 y3 + 1793 x1 x3 y2 y3 + 1785 x2 x3 y1 y2 + 1793 x2 x3"
    " y1 y3 + 8 x2 x3 y2 y3 + 1795 x1 x2 + 56 y1 y2 y3 + 24 x1^2 x2 x3 + 1777 x1 x2^2 x3 + 1793 x1 x2 "
    "x3^2 + 1785 x3 y2 y3 + 1769 x1 x2 y1 + 1785 x2 x3 y3 + 16 x1 x2 y2 + 32 x3 y1 y2 + 1785 x1 x2 y1^2 +"
    " 1785 x1^2 y1 y2 + 1793 x2 y2 y3 + 1769 x1 y1 y2 + 8 x1 x3 y2 + 1793 x2 x3 y2 + 1785 x1 y1 y3 + 16 "
    "x2 y1 y2 + 16 x1 y2 y3 + 1793 x1 x3 y2^2 + 1785 x1 x3 y1 + 1793 x1 x3 y1^2 + 16 x1 x3 y3 + 8 x2 y1 "
    "y3 + 8 x1^2 y2 y3 + 1793 x2^2 y1 y3 + 32 x1 x2 y3 + 16 x2 x3 y1 + 1793 x1^2 y1 y3 + 16 x3 y1 y3 + 8 "
    "x2^2 y2 y3 + 1785 x1 x2 y2^2 + 1785 x2^2 y1 y2 + 8 x2 x3 y1^2 + 8 x2 x3 y2^2 + 24 y1^2 y2 y3 + 1777 "
    "y1 y2^2 y3 + 1793 y1 y2 y3^2 + 56 x1 x2 x3 + 16 x3^2 + 11 x1^2 + 1791 y1 + 5 y2 + 10 y3 + 11 y1^2 + "
    "1800 x2^2 + 16 y1^3 + 4 x1^4 + 4 x2^4 + 1800 y2^2 + 16 y3^2 + 1793 y2^3 + 4 y1^4 + 4 y2^4 + 16 x1^3 "
    "+ 1793 x2^3 + 4 x1^2 x3^2 + 8 x2^3 x3 + 4 x2^2 x3^2 + 1761 y1^2 y2 + 1769 y1^2 y3 + 32 y1 y2^2 + 16 "
    "y1 y3^2 + 1774 y1 y3 + 11 y2 y3 + 8 x2^2 y1^2 + 8 x2^2 y2^2 + 1785 y1^3 y2 + 1793 y1^3 y3 + 24 y1^2 "
    "y2^2 + 4 y1^2 y3^2 + 1785 y1 y2^3 + 8 y2^3 y3 + 4 y2^2 y3^2 + 1761 x1^2 x2 + 1769 x1^2 x3 + 32 x1 "
    "x2^2 + 16 x1 x3^2 + 1777 x2^2 x3 + 1785 x2 x3^2";
inline constexpr std::uint64_t kZ1Checksum = 0x53c3041cbdb292baULL;

inline constexpr std::string_view kZ2Text =
    "1795 x1 + 3 x2 + 6 x3 + 32 x1 x2 y1 y2 + 1769 x1 y3 + 16 x1 y1^2 + 16 x1 y2^2 + 1785 x2 y1 + 8 x2 y2"
    " + 16 x2 y3 + 1793 x2 y1^2 + 1793 x2 y2^2 + 1769 x3 y1 + 16 x3 y2 + 32 x3 y3 + 1785 x3 y1^2 + 1785 "
    "x3 y2^2 + 16 x1^2 y1 + 1793 x1^2 y2 + 1785 x1^2 y3 + 8 x1^2 y1^2 + 8 x1^2 y2^2 + 16 x2^2 y1 + 1793 "
    "x2^2 y2 + 1785 x2^2 y3 + 24 x1^2 x2^2 + 1785 x1^3 x2 + 1785 x1 x2^3 + 1793 x1^3 x3 + 1777 y2^2 y3 + "
    "1785 y2 y3^2 + 32 x1 y1 + 1785 x1 y2 + 1772 x1 x3 + 13 x2 x3 + 1791 y1 y2 + 16 x1 x2 y1 y3 + 1785 x1"
    " x2 y2 y3 + 16 x1 x3 y1 y2 + 8 x1 x3 y1 y3 + 1793 x1 x3 y2 y3 + 1785 x2 x3 y1 y2 + 1793 x2 x3 y1 y3 "
    "+ 8 x2 x3 y2 y3 + 1791 x1 x2 + 56 y1 y2 y3 + 24 x1^2 x2 x3 + 1777 x1 x2^2 x3 + 1793 x1 x2 x3^2 + "
    "1785 x3 y2 y3 + 1769 x1 x2 y1 + 1785 x2 x3 y3 + 16 x1 x2 y2 + 32 x3 y1 y2 + 1785 x1 x2 y1^2 + 1785 "
    "x1^2 y1 y2 + 1793 x2 y2 y3 + 1769 x1 y1 y2 + 8 x1 x3 y2 + 1793 x2 x3 y2 + 1785 x1 y1 y3 + 16 x2 y1 "
    "y2 + 16 x1 y2 y3 + 1793 x1 x3 y2^2 + 1785 x1 x3 y1 + 1793 x1 x3 y1^2 + 16 x1 x3 y3 + 8 x2 y1 y3 + 8 "
    "x1^2 y2 y3 + 1793 x2^2 y1 y3 + 32 x1 x2 y3 + 16 x2 x3 y1 + 1793 x1^2 y1 y3 + 16 x3 y1 y3 + 8 x2^2 y2"
    " y3 + 1785 x1 x2 y2^2 + 1785 x2^2 y1 y2 + 8 x2 x3 y1^2 + 8 x2 x3 y2^2 + 24 y1^2 y2 y3 + 1777 y1 y2^2"
    " y3 + 1793 y1 y2 y3^2 + 56 x1 x2 x3 + 16 x3^2 + 13 x1^2 + 1795 y1 + 3 y2 + 6 y3 + 13 y1^2 + x2^2 + "
    "16 y1^3 + 4 x1^4 + 4 x2^4 + y2^2 + 16 y3^2 + 1793 y2^3 + 4 y1^4 + 4 y2^4 + 16 x1^3 + 1793 x2^3 + 4 "
    "x1^2 x3^2 + 8 x2^3 x3 + 4 x2^2 x3^2 + 1761 y1^2 y2 + 1769 y1^2 y3 + 32 y1 y2^2 + 16 y1 y3^2 + 1772 "
    "y1 y3 + 13 y2 y3 + 8 x2^2 y1^2 + 8 x2^2 y2^2 + 1785 y1^3 y2 + 1793 y1^3 y3 + 24 y1^2 y2^2 + 4 y1^2 "
    "y3^2 + 1785 y1 y2^3 + 8 y2^3 y3 + 4 y2^2 y3^2 + 1761 x1^2 x2 + 1769 x1^2 x3 + 32 x1 x2^2 + 16 x1 "
    "x3^2 + 1777 x2^2 x3 + 1785 x2 x3^2";
inline constexpr std::uint64_t kZ2Checksum = 0xea835644c74b1587ULL;

inline constexpr std::string_view kZ3Text =
    "1793 y1 + 4 y2 + 8 y3 + 8 y1 y2 + 1797 y1^2 + 4 y1 y3 + 1797 y2^2 + 1797 y2 y3 + 1793 x1 + 4 x2 + 8 "
    "x3 + 8 x1 x2 + 1797 x1^2 + 4 x1 x3 + 1797 x2^2 + 1797 x2 x3";
inline constexpr std::uint64_t kZ3Checksum = 0xd576698a1e09c32dULL;

inline constexpr std::string_view kEX2Text =
    "2 x2 y2 z1 z2 + x2 y2 z3 z1 + 1800 x2 y2 z3 z2 + 4 x2 y3 z1 z2 + 2 x2 y3 z3 z1 + 1799 x2 y3 z3 z2 + "
    "1799 x2 y1^2 z1 z2 + 1800 x2 y1^2 z3 z1 + x2 y1^2 z3 z2 + 1799 x2 y2^2 z1 z2 + 1800 x2 y2^2 z3 z1 + "
    "x2 y2^2 z3 z2 + 1793 x3 y1 z1 z2 + 1797 x3 y1 z3 z1 + 4 x3 y1 z3 z2 + 4 x3 y2 z1 z2 + 2 x3 y2 z3 z1 "
    "+ 1799 x3 y2 z3 z2 + 8 x1 y1 z1 z2 + 4 x1 y1 z3 z1 + 1797 x1 y1 z3 z2 + 1797 x1 y2 z1 z2 + 1799 x1 "
    "y2 z3 z1 + 2 x1 y2 z3 z2 + 8 x3 y3 z1 z2 + 4 x3 y3 z3 z1 + 1797 x3 y3 z3 z2 + 1797 x3 y1^2 z1 z2 + "
    "1799 x3 y1^2 z3 z1 + 2 x3 y1^2 z3 z2 + 1797 x3 y2^2 z1 z2 + 1799 x3 y2^2 z3 z1 + 2 x3 y2^2 z3 z2 + 4"
    " x1^2 y1 z1 z2 + 2 x1^2 y1 z3 z1 + 1799 x1^2 y1 z3 z2 + 1799 x1^2 y2 z1 z2 + 1800 x1^2 y2 z3 z1 + "
    "x1^2 y2 z3 z2 + 1797 x1^2 y3 z1 z2 + 1799 x1^2 y3 z3 z1 + 2 x1^2 y3 z3 z2 + 2 x1^2 y1^2 z1 z2 + x1^2"
    " y1^2 z3 z1 + 1800 x1^2 y1^2 z3 z2 + 2 x1^2 y2^2 z1 z2 + x1^2 y2^2 z3 z1 + 1800 x1^2 y2^2 z3 z2 + 4 "
    "x2^2 y1 z1 z2 + 2 x2^2 y1 z3 z1 + 1799 x2^2 y1 z3 z2 + 1799 x2^2 y2 z1 z2 + 1800 x2^2 y2 z3 z1 + "
    "x2^2 y2 z3 z2 + 1797 x2^2 y3 z1 z2 + 1799 x2^2 y3 z3 z1 + 2 x2^2 y3 z3 z2 + 2 x2^2 y1^2 z1 z2 + x2^2"
    " y1^2 z3 z1 + 1800 x2^2 y1^2 z3 z2 + 2 x2^2 y2^2 z1 z2 + x2^2 y2^2 z3 z1 + 1800 x2^2 y2^2 z3 z2 + "
    "1793 x1 y3 z1 z2 + 1797 x1 y3 z3 z1 + 4 x1 y3 z3 z2 + 4 x1 y1^2 z1 z2 + 2 x1 y1^2 z3 z1 + 1799 x1 "
    "y1^2 z3 z2 + 4 x1 y2^2 z1 z2 + 2 x1 y2^2 z3 z1 + 1799 x1 y2^2 z3 z2 + 1797 x2 y1 z1 z2 + 1799 x2 y1 "
    "z3 z1 + 2 x2 y1 z3 z2 + 1799 x1 x3 y2 z1 + 2 x1 x3 y2 z3 + 1800 x1 x3 y2 z1^2 + 1800 x1 x3 y2 z2^2 +"
    " 2 x2 x3 y2 z1 + 1799 x2 x3 y2 z3 + x2 x3 y2 z1^2 + x2 x3 y2 z2^2 + 4 x1 y1 y3 z1 + 1797 x1 y1 y3 z3"
    " + 2 x1 y1 y3 z1^2 + 2 x1 y1 y3 z2^2 + 1797 x2 y1 y2 z1 + 4 x2 y1 y2 z3 + 1799 x2 y1 y2 z1^2 + 1799 "
    "x2 y1 y2 z2^2 + 1797 x1 y2 y3 z1 + 4 x1 y2 y3 z3 + 1799 x1 y2 y3 z1^2 + 1799 x1 y2 y3 z2^2 + 2 x1 x3"
    " y2^2 z1 + 1799 x1 x3 y2^2 z3 + x1 x3 y2^2 z1^2 + x1 x3 y2^2 z2^2 + 4 x1 x3 y1 z1 + 1797 x1 x3 y1 z3"
    " + 2 x1 x3 y1 z1^2 + 2 x1 x3 y1 z2^2 + 2 x1 x3 y1^2 z1 + 1799 x1 x3 y1^2 z3 + x1 x3 y1^2 z1^2 + x1 "
    "x3 y1^2 z2^2 + 1797 x1 x3 y3 z1 + 4 x1 x3 y3 z3 + 1799 x1 x3 y3 z1^2 + 1799 x1 x3 y3 z2^2 + 1799 x2 "
    "y1 y3 z1 + 2 x2 y1 y3 z3 + 1800 x2 y1 y3 z1^2 + 1800 x2 y1 y3 z2^2 + 1799 x1^2 y2 y3 z1 + 2 x1^2 y2 "
    "y3 z3 + 1800 x1^2 y2 y3 z1^2 + 1800 x1^2 y2 y3 z2^2 + 2 x2^2 y1 y3 z1 + 1799 x2^2 y1 y3 z3 + x2^2 y1"
    " y3 z1^2 + x2^2 y1 y3 z2^2 + 1793 x1 x2 y3 z1 + 8 x1 x2 y3 z3 + 1797 x1 x2 y3 z1^2 + 1797 x1 x2 y3 "
    "z2^2 + 1797 x2 x3 y1 z1 + 4 x2 x3 y1 z3 + 1799 x2 x3 y1 z1^2 + 1799 x2 x3 y1 z2^2 + 2 x1^2 y1 y3 z1 "
    "+ 1799 x1^2 y1 y3 z3 + x1^2 y1 y3 z1^2 + x1^2 y1 y3 z2^2 + 1797 x3 y1 y3 z1 + 4 x3 y1 y3 z3 + 1799 "
    "x3 y1 y3 z1^2 + 1799 x3 y1 y3 z2^2 + 1799 x2^2 y2 y3 z1 + 2 x2^2 y2 y3 z3 + 1800 x2^2 y2 y3 z1^2 + "
    "1800 x2^2 y2 y3 z2^2 + 4 x1 x2 y2^2 z1 + 1797 x1 x2 y2^2 z3 + 2 x1 x2 y2^2 z1^2 + 2 x1 x2 y2^2 z2^2 "
    "+ 4 x2^2 y1 y2 z1 + 1797 x2^2 y1 y2 z3 + 2 x2^2 y1 y2 z1^2 + 2 x2^2 y1 y2 z2^2 + 1799 x2 x3 y1^2 z1 "
    "+ 2 x2 x3 y1^2 z3 + 1800 x2 x3 y1^2 z1^2 + 1800 x2 x3 y1^2 z2^2 + 1799 x2 x3 y2^2 z1 + 2 x2 x3 y2^2 "
    "z3 + 1800 x2 x3 y2^2 z1^2 + 1800 x2 x3 y2^2 z2^2 + 4 x3 y2 y3 z1 + 1797 x3 y2 y3 z3 + 2 x3 y2 y3 "
    "z1^2 + 2 x3 y2 y3 z2^2 + 8 x1 x2 y1 z1 + 1793 x1 x2 y1 z3 + 4 x1 x2 y1 z1^2 + 4 x1 x2 y1 z2^2 + 4 x2"
    " x3 y3 z1 + 1797 x2 x3 y3 z3 + 2 x2 x3 y3 z1^2 + 2 x2 x3 y3 z2^2 + 1797 x1 x2 y2 z1 + 4 x1 x2 y2 z3 "
    "+ 1799 x1 x2 y2 z1^2 + 1799 x1 x2 y2 z2^2 + 1793 x3 y1 y2 z1 + 8 x3 y1 y2 z3 + 1797 x3 y1 y2 z1^2 + "
    "1797 x3 y1 y2 z2^2 + 4 x1 x2 y1^2 z1 + 1797 x1 x2 y1^2 z3 + 2 x1 x2 y1^2 z1^2 + 2 x1 x2 y1^2 z2^2 + "
    "4 x1^2 y1 y2 z1 + 1797 x1^2 y1 y2 z3 + 2 x1^2 y1 y2 z1^2 + 2 x1^2 y1 y2 z2^2 + 2 x2 y2 y3 z1 + 1799 "
    "x2 y2 y3 z3 + x2 y2 y3 z1^2 + 8 x1 x2 y1 y2 z1 z2 + 4 x1 x2 y1 y2 z3 z1 + 1797 x1 x2 y1 y2 z3 z2 + 4"
    " x1 x2 y1 y3 z1 z2 + 2 x1 x2 y1 y3 z3 z1 + 1799 x1 x2 y1 y3 z3 z2 + 1797 x1 x2 y2 y3 z1 z2 + 1799 x1"
    " x2 y2 y3 z3 z1 + 2 x1 x2 y2 y3 z3 z2 + 4 x1 x3 y1 y2 z1 z2 + 2 x1 x3 y1 y2 z3 z1 + 1799 x1 x3 y1 y2"
    " z3 z2 + 2 x1 x3 y1 y3 z1 z2 + x1 x3 y1 y3 z3 z1 + 1800 x1 x3 y1 y3 z3 z2 + 1799 x1 x3 y2 y3 z1 z2 +"
    " 1800 x1 x3 y2 y3 z3 z1 + x1 x3 y2 y3 z3 z2 + 1797 x2 x3 y1 y2 z1 z2 + 1799 x2 x3 y1 y2 z3 z1 + 2 x2"
    " x3 y1 y2 z3 z2 + 1799 x2 x3 y1 y3 z1 z2 + 1800 x2 x3 y1 y3 z3 z1 + x2 x3 y1 y3 z3 z2 + 2 x2 x3 y2 "
    "y3 z1 z2 + x2 x3 y2 y3 z3 z1 + 1800 x2 x3 y2 y3 z3 z2 + 1799 x2 y3 z2^2 + 1799 x2 y1^2 z3 + x2 y1^2 "
    "z2^2 + 4 x2 x3 y1 z1 z2 + 1797 x1 x2 y3 z3 z2 + 4 x1 x2 y3 z3 z1 + x2^2 y1 y3 z3 z2 + 8 x1 x2 y3 z1 "
    "z2 + 2 x1 y2 y3 z3 z1 + 1799 x1 y2 y3 z3 z2 + 1799 x1 x3 y2^2 z1 z2 + 1800 x1 x3 y2^2 z3 z1 + x1 x3 "
    "y2^2 z3 z2 + 1797 x1 x3 y1 z1 z2 + 1799 x1 x3 y1 z3 z1 + 2 x1 x3 y1 z3 z2 + 1799 x1 x3 y1^2 z1 z2 + "
    "1800 x1 x3 y1^2 z3 z1 + x1 x3 y1^2 z3 z2 + 4 x1 x3 y3 z1 z2 + 2 x1 x3 y3 z3 z1 + 1799 x1 x3 y3 z3 z2"
    " + 2 x2 y1 y3 z1 z2 + x2 y1 y3 z3 z1 + 1800 x2 y1 y3 z3 z2 + 2 x1^2 y2 y3 z1 z2 + x1^2 y2 y3 z3 z1 +"
    " 1800 x1^2 y2 y3 z3 z2 + 1799 x2^2 y1 y3 z1 z2 + 1800 x2^2 y1 y3 z3 z1 + 2 x1 x3 y2 z1 z2 + x1 x3 y2"
    " z3 z1 + 1800 x1 x3 y2 z3 z2 + 1799 x2 x3 y2 z1 z2 + 1800 x2 x3 y2 z3 z1 + x2 x3 y2 z3 z2 + 1797 x1 "
    "y1 y3 z1 z2 + 1799 x1 y1 y3 z3 z1 + 2 x1 y1 y3 z3 z2 + 4 x2 y1 y2 z1 z2 + 2 x2 y1 y2 z3 z1 + 1799 x2"
    " y1 y2 z3 z2 + 4 x1 y2 y3 z1 z2 + 4 x2 y3 z3 + 4 x3 y2 z3 + 1800 x2 y2 z2^2 + 1800 x2 y2 z1^2 + 2 x2"
    " y2^2 z1 + 4 x3 y1 z1^2 + 1799 x2 y2^2 z3 + 1799 x3 y2 z2^2 + 1793 x1 y1 z1 + 8 x1 y1 z3 + 1797 x1 "
    "y1 z1^2 + 1797 x1 y1 z2^2 + 4 x1 y2 z1 + 1797 x1 y2 z3 + 2 x1 y2 z1^2 + 2 x1 y2 z2^2 + 1793 x3 y3 z1"
    " + 8 x3 y3 z3 + 1797 x3 y3 z1^2 + 1797 x3 y3 z2^2 + 4 x3 y1^2 z1 + 1797 x3 y1^2 z3 + 2 x3 y1^2 z1^2 "
    "+ 2 x3 y1^2 z2^2 + 4 x3 y2^2 z1 + 1797 x3 y2^2 z3 + 2 x3 y2^2 z1^2 + 2 x3 y2^2 z2^2 + 1797 x1^2 y1 "
    "z1 + 4 x1^2 y1 z3 + 1799 x1^2 y1 z1^2 + 1799 x1^2 y1 z2^2 + 2 x1^2 y2 z1 + 1799 x1^2 y2 z3 + x1^2 y2"
    " z1^2 + x1^2 y2 z2^2 + 4 x1^2 y3 z1 + 1797 x1^2 y3 z3 + 2 x1^2 y3 z1^2 + 2 x1^2 y3 z2^2 + 1799 x1^2 "
    "y1^2 z1 + 2 x1^2 y1^2 z3 + 1800 x1^2 y1^2 z1^2 + 1800 x1^2 y1^2 z2^2 + 1799 x1^2 y2^2 z1 + 2 x1^2 "
    "y2^2 z3 + 1800 x1^2 y2^2 z1^2 + 1800 x1^2 y2^2 z2^2 + 1797 x2^2 y1 z1 + 4 x2^2 y1 z3 + 1799 x2^2 y1 "
    "z1^2 + 1799 x2^2 y1 z2^2 + 2 x2^2 y2 z1 + 1799 x2^2 y2 z3 + x2^2 y2 z1^2 + x2^2 y2 z2^2 + 4 x2^2 y3 "
    "z1 + 1797 x2^2 y3 z3 + 2 x2^2 y3 z1^2 + 2 x2^2 y3 z2^2 + 1799 x2^2 y1^2 z1 + 2 x2^2 y1^2 z3 + 1800 "
    "x2^2 y1^2 z1^2 + 1800 x2^2 y1^2 z2^2 + 1799 x2^2 y2^2 z1 + 2 x2^2 y2^2 z3 + 1800 x2^2 y2^2 z1^2 + "
    "1800 x2^2 y2^2 z2^2 + 8 x1 y3 z1 + 1793 x1 y3 z3 + 4 x1 y3 z1^2 + 4 x1 y3 z2^2 + 1797 x1 y1^2 z1 + 4"
    " x1 y1^2 z3 + 1799 x1 y1^2 z1^2 + 1799 x1 y1^2 z2^2 + 1797 x1 y2^2 z1 + 4 x1 y2^2 z3 + 1799 x1 y2^2 "
    "z1^2 + 1799 x1 y2^2 z2^2 + 4 x2 y1 z1 + 1797 x2 y1 z3 + 2 x2 y1 z1^2 + 2 x2 y1 z2^2 + 2 x2 y1^2 z1 +"
    " 1799 x2 y3 z1^2 + x2 y2^2 z2^2 + 1799 x3 y2 z1^2 + x2 y2^2 z1^2 + 2 x2 y2 z3 + 4 x3 y1 z2^2 + 1793 "
    "x3 y1 z3 + 8 x3 y1 z1 + 1797 x3 y2 z1 + x2 y1^2 z1^2 + 1797 x2 y3 z1 + 1799 x2 y2 z1 + 2 x2 x3 y1 z3"
    " z1 + 1799 x2 x3 y1 z3 z2 + 1799 x1^2 y1 y3 z1 z2 + 1800 x1^2 y1 y3 z3 z1 + x1^2 y1 y3 z3 z2 + 4 x3 "
    "y1 y3 z1 z2 + 2 x3 y1 y3 z3 z1 + 1799 x3 y1 y3 z3 z2 + 2 x2^2 y2 y3 z1 z2 + x2^2 y2 y3 z3 z1 + 1800 "
    "x2^2 y2 y3 z3 z2 + 1797 x1 x2 y2^2 z1 z2 + 1799 x1 x2 y2^2 z3 z1 + 2 x1 x2 y2^2 z3 z2 + 1797 x2^2 y1"
    " y2 z1 z2 + 1799 x2^2 y1 y2 z3 z1 + 2 x2^2 y1 y2 z3 z2 + 2 x2 x3 y1^2 z1 z2 + x2 x3 y1^2 z3 z1 + "
    "1800 x2 x3 y1^2 z3 z2 + 2 x2 x3 y2^2 z1 z2 + x2 x3 y2^2 z3 z1 + 1800 x2 x3 y2^2 z3 z2 + 1797 x3 y2 "
    "y3 z1 z2 + 1799 x3 y2 y3 z3 z1 + 2 x3 y2 y3 z3 z2 + 1793 x1 x2 y1 z1 z2 + 1797 x1 x2 y1 z3 z1 + 4 x1"
    " x2 y1 z3 z2 + 1797 x2 x3 y3 z1 z2 + 1799 x2 x3 y3 z3 z1 + 2 x2 x3 y3 z3 z2 + 4 x1 x2 y2 z1 z2 + 2 "
    "x1 x2 y2 z3 z1 + 1799 x1 x2 y2 z3 z2 + 8 x3 y1 y2 z1 z2 + 4 x3 y1 y2 z3 z1 + 1797 x3 y1 y2 z3 z2 + "
    "1797 x1 x2 y1^2 z1 z2 + 1799 x1 x2 y1^2 z3 z1 + 2 x1 x2 y1^2 z3 z2 + 1797 x1^2 y1 y2 z1 z2 + 1799 "
    "x1^2 y1 y2 z3 z1 + 2 x1^2 y1 y2 z3 z2 + 1799 x2 y2 y3 z1 z2 + 1800 x2 y2 y3 z3 z1 + x2 y2 y3 z3 z2 +"
    " 1793 x1 y1 y2 z1 z2 + 1797 x1 y1 y2 z3 z1 + 4 x1 y1 y2 z3 z2 + 1793 x1 x2 y1 y2 z1 + 8 x1 x2 y1 y2 "
    "z3 + 1797 x1 x2 y1 y2 z1^2 + 1797 x1 x2 y1 y2 z2^2 + 1797 x1 x2 y1 y3 z1 + 4 x1 x2 y1 y3 z3 + 1799 "
    "x1 x2 y1 y3 z1^2 + 1799 x1 x2 y1 y3 z2^2 + 4 x1 x2 y2 y3 z1 + 1797 x1 x2 y2 y3 z3 + 2 x1 x2 y2 y3 "
    "z1^2 + 2 x1 x2 y2 y3 z2^2 + 1797 x1 x3 y1 y2 z1 + 4 x1 x3 y1 y2 z3 + 1799 x1 x3 y1 y2 z1^2 + 1799 x1"
    " x3 y1 y2 z2^2 + 1799 x1 x3 y1 y3 z1 + 2 x1 x3 y1 y3 z3 + 1800 x1 x3 y1 y3 z1^2 + 1800 x1 x3 y1 y3 "
    "z2^2 + 2 x1 x3 y2 y3 z1 + 1799 x1 x3 y2 y3 z3 + x1 x3 y2 y3 z1^2 + x1 x3 y2 y3 z2^2 + 4 x2 x3 y1 y2 "
    "z1 + 1797 x2 x3 y1 y2 z3 + 2 x2 x3 y1 y2 z1^2 + 2 x2 x3 y1 y2 z2^2 + 2 x2 x3 y1 y3 z1 + 1799 x2 x3 "
    "y1 y3 z3 + x2 x3 y1 y3 z1^2 + x2 x3 y1 y3 z2^2 + 1799 x2 x3 y2 y3 z1 + 2 x2 x3 y2 y3 z3 + 1800 x2 x3"
    " y2 y3 z1^2 + 1800 x2 x3 y2 y3 z2^2 + x2 y2 y3 z2^2 + 8 x1 y1 y2 z1 + 1793 x1 y1 y2 z3 + 4 x1 y1 y2 "
    "z1^2 + 4 x1 y1 y2 z2^2 + x1 x3 y1 y3 z2 + 1800 x1 x3 y2 y3 z2 + 1799 x2 x3 y1 y2 z2 + 1800 x2 x3 y1 "
    "y3 z2 + x2 x3 y2 y3 z2 + 4 x1 x2 y1 y2 z2 + 2 x1 x2 y1 y3 z2 + 1799 x1 x2 y2 y3 z2 + 2 x1 x3 y1 y2 "
    "z2 + 2 x3 y2 z2 + x2 y2 z2 + 1800 x2 y1^2 z2 + 1800 x2 y2^2 z2 + 1797 x3 y1 z2 + 2 x2 y3 z2 + 4 x1 "
    "y1 z2 + 1799 x1 y2 z2 + 4 x3 y3 z2 + 1799 x3 y1^2 z2 + 1799 x3 y2^2 z2 + 2 x1^2 y1 z2 + 1800 x1^2 y2"
    " z2 + 1799 x1^2 y3 z2 + x1^2 y1^2 z2 + x1^2 y2^2 z2 + 2 x2^2 y1 z2 + 1800 x2^2 y2 z2 + 1799 x2^2 y3 "
    "z2 + x2^2 y1^2 z2 + x2^2 y2^2 z2 + 1797 x1 y3 z2 + 2 x1 y1^2 z2 + 2 x1 y2^2 z2 + 1799 x2 y1 z2 + x1 "
    "x3 y2 z2 + 1800 x2 x3 y2 z2 + 1799 x1 y1 y3 z2 + 2 x2 y1 y2 z2 + 2 x1 y2 y3 z2 + 1800 x1 x3 y2^2 z2 "
    "+ 1799 x1 x3 y1 z2 + 1800 x1 x3 y1^2 z2 + 2 x1 x3 y3 z2 + x2 y1 y3 z2 + x1^2 y2 y3 z2 + 1800 x2^2 y1"
    " y3 z2 + 4 x1 x2 y3 z2 + 2 x2 x3 y1 z2 + 1800 x1^2 y1 y3 z2 + 2 x3 y1 y3 z2 + x2^2 y2 y3 z2 + 1799 "
    "x1 x2 y2^2 z2 + 1799 x2^2 y1 y2 z2 + x2 x3 y1^2 z2 + x2 x3 y2^2 z2 + 1799 x3 y2 y3 z2 + 1797 x1 x2 "
    "y1 z2 + 1799 x2 x3 y3 z2 + 2 x1 x2 y2 z2 + 4 x3 y1 y2 z2 + 1799 x1 x2 y1^2 z2 + 1799 x1^2 y1 y2 z2 +"
    " 1800 x2 y2 y3 z2 + 1797 x1 y1 y2 z2";
inline constexpr std::uint64_t kEX2Checksum = 0x61a3f4f42dbdf603ULL;

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Listing {
    std::string_view name;
    std::string_view text;
    std::uint64_t checksum;
    unsigned nvars;
    VarNames names;
};

inline Listing listing_z1() { return {"z1", kZ1Text, kZ1Checksum, 6, VarNames::xy()}; }
inline Listing listing_z2() { return {"z2", kZ2Text, kZ2Checksum, 6, VarNames::xy()}; }
inline Listing listing_z3() { return {"z3", kZ3Text, kZ3Checksum, 6, VarNames::xy()}; }
inline Listing listing_example2() { return {"m1", kEX2Text, kEX2Checksum, 9, VarNames::xyz()}; }

struct LoadedListing {
    SparsePoly poly;
    std::size_t raw_terms = 0;
    /// Monomials written more than once; their coefficients are summed.
    std::size_t repeated_monomials = 0;
    bool checksum_ok = false;
};

inline LoadedListing load(const Listing& l) {
    LoadedListing out;
    out.checksum_ok = fnv1a(l.text) == l.checksum;
    auto terms = parse_terms(l.text, l.nvars, kP, l.names);
    out.raw_terms = terms.size();
    std::set<Monomial> seen, repeated;
    for (const auto& t : terms)
        if (!seen.insert(t.mono).second) repeated.insert(t.mono);
    out.repeated_monomials = repeated.size();
    out.poly = SparsePoly::from_terms(l.nvars, kP, std::move(terms));
    return out;
}

}  // namespace hlg::fixtures

#endif  // HLG_FIXTURES_HPP
