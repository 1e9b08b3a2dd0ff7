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

#ifndef HLG_VERIFY_HPP
#define HLG_VERIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "group.hpp"
#include "pairing.hpp"
#include "polyio.hpp"
#include "serialize.hpp"

// Checks of the synthesized worked-example objects against the stored
// listings. Exact matches are reported; structural properties are verdicts.

namespace hlg {

struct TermDiff {
    Monomial mono;
    Residue ours = 0;
    Residue listed = 0;
};

struct ListingComparison {
    bool exact = false;
    std::size_t ours_terms = 0;
    std::size_t listed_terms = 0;
    std::size_t differing_terms = 0;
    std::vector<TermDiff> first;  ///< up to ten differing monomials
};

inline ListingComparison compare_to_listing(const SparsePoly& ours, const SparsePoly& listed, std::size_t show = 10) {
    SparsePoly::check_compatible(ours, listed);
    ListingComparison c;
    c.ours_terms = ours.size();
    c.listed_terms = listed.size();
    std::map<Monomial, std::pair<Residue, Residue>> all;
    for (const auto& t : ours.terms()) all[t.mono].first = t.coeff;
    for (const auto& t : listed.terms()) all[t.mono].second = t.coeff;
    for (const auto& [m, cc] : all) {
        if (cc.first == cc.second) continue;
        ++c.differing_terms;
        if (c.first.size() < show) c.first.push_back({m, cc.first, cc.second});
    }
    c.exact = c.differing_terms == 0;
    return c;
}

struct Example1Verdict {
    Convention convention = Convention::Lambda2First;
    unsigned retraction_index = 0;
    bool listings_intact = false;
    bool generator_on_curve = false;
    FieldVector generator_preimage;
    std::array<ListingComparison, 3> z;
    std::array<int, 3> degrees{};
    std::array<int, 3> listed_degrees{};
    bool law_symmetric = false;
    bool z3_block_symmetric = false;
    bool z3_degree2 = false;
    bool z3_constant_free = false;
    bool z12_degree4 = false;

    bool z3_structural() const { return z3_block_symmetric && z3_degree2; }
};

inline Example1Verdict verify_example1(Convention convention, std::optional<unsigned> retraction = std::nullopt) {
    Example1Verdict v;
    v.convention = convention;
    const Trapdoor trap = fixtures::example1_trapdoor(convention, retraction);
    v.retraction_index = trap.immersion().retraction_index();
    const FieldVector g = fixtures::example1_generator();
    v.generator_on_curve = member(trap, g);
    v.generator_preimage = trap.theta().inverse().evaluate(g);

    const PolyMap law = synth_law(trap);
    const std::array<fixtures::Listing, 3> listings{fixtures::listing_z1(), fixtures::listing_z2(), fixtures::listing_z3()};
    v.listings_intact = true;
    v.law_symmetric = true;
    for (unsigned i = 0; i < 3; ++i) {
        const auto loaded = fixtures::load(listings[i]);
        v.listings_intact = v.listings_intact && loaded.checksum_ok;
        v.z[i] = compare_to_listing(law[i], loaded.poly);
        v.degrees[i] = law[i].total_degree();
        v.listed_degrees[i] = loaded.poly.total_degree();
        v.law_symmetric = v.law_symmetric && block_swap(law[i], 3) == law[i];
    }
    v.z3_block_symmetric = block_swap(law[2], 3) == law[2];
    v.z3_degree2 = v.degrees[2] == 2;
    v.z3_constant_free = law[2].constant_term() == 0;
    v.z12_degree4 = v.degrees[0] == 4 && v.degrees[1] == 4;
    return v;
}

struct DegreeProfile {
    int total = kZeroDegree;
    std::vector<int> blocks;  ///< degree in each variable block
    bool others_zero = true;  ///< every output after the first is zero
    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline DegreeProfile degree_profile(const SparsePoly& f, unsigned k, unsigned n) {
    DegreeProfile d;
    d.total = f.total_degree();
    for (unsigned j = 0; j < k; ++j) d.blocks.push_back(f.block_degree(j * n, (j + 1) * n));
    return d;
}

struct Example2Verdict {
    Convention convention = Convention::Lambda2First;
    bool listing_intact = false;
    std::size_t listing_repeated_monomials = 0;
    ListingComparison m1;
    DegreeProfile ours;
    DegreeProfile listed;
    DegreeProfile expected;
    unsigned eval_trials = 0;
    unsigned eval_mismatches = 0;

    bool profile_ok() const { return ours == expected && ours == listed; }
};

/// Expected shape: the first output is c(t1 t2 ... tk) with c linear and
/// each t_j = tmap of one block, so total degree k deg(tmap) and block
/// degree deg(tmap); the other outputs vanish since the target is an axis.
inline Example2Verdict verify_example2(Convention convention, unsigned eval_trials = 200, std::uint64_t seed = 1) {
    Example2Verdict v;
    v.convention = convention;
    const unsigned k = fixtures::kExample2Arity;
    const MultilinearPairing pr(k, fixtures::example1_trapdoor(convention), fixtures::example2_target());
    const unsigned n = pr.source().dim();
    const PolyMap m = pair_expand(pr);

    const auto loaded = fixtures::load(fixtures::listing_example2());
    v.listing_intact = loaded.checksum_ok;
    v.listing_repeated_monomials = loaded.repeated_monomials;
    v.m1 = compare_to_listing(m[0], loaded.poly);

    v.ours = degree_profile(m[0], k, n);
    for (unsigned i = 1; i < m.out_dim(); ++i) v.ours.others_zero = v.ours.others_zero && m[i].is_zero();
    v.listed = degree_profile(loaded.poly, k, n);
    const int dt = pr.source().tmap().total_degree();
    v.expected.total = static_cast<int>(k) * dt;
    v.expected.blocks.assign(k, dt);

    Rng rng(seed);
    v.eval_trials = eval_trials;
    for (unsigned t = 0; t < eval_trials; ++t) {
        std::vector<GroupElement> pts;
        FieldVector all(pr.modulus(), 0);
        for (unsigned j = 0; j < k; ++j) {
            pts.push_back({pr.source().point(rng.below(pr.modulus()))});
            all = concat(all, pts.back().coords);
        }
        if (m.evaluate(all) != pair_eval(pr, pts).coords) ++v.eval_mismatches;
    }
    return v;
}

namespace io {

inline Json to_json(const ListingComparison& c, unsigned nvars, const VarNames& names) {
    Json first = Json::array();
    for (const auto& d : c.first)
        first.push_back(Json{{"monomial", monomial_text(d.mono, nvars, names)},
                             {"ours", d.ours},
                             {"listed", d.listed}});
    return Json{{"exact", c.exact},
                {"ours_terms", c.ours_terms},
                {"listed_terms", c.listed_terms},
                {"differing_terms", c.differing_terms},
                {"first_differences", std::move(first)}};
}

inline Json to_json(const Example1Verdict& v) {
    const VarNames xy = VarNames::xy();
    return Json{{"convention", std::string(to_string(v.convention))},
                {"retraction_index", v.retraction_index},
                {"listings_intact", v.listings_intact},
                {"generator_on_curve", v.generator_on_curve},
                {"generator_preimage", v.generator_preimage.raw()},
                {"z1_exact", v.z[0].exact},
                {"z2_exact", v.z[1].exact},
                {"z3_exact", v.z[2].exact},
                {"z3_structural", v.z3_structural()},
                {"z3_block_symmetric", v.z3_block_symmetric},
                {"z3_degree2", v.z3_degree2},
                {"z3_constant_free", v.z3_constant_free},
                {"z12_degree4", v.z12_degree4},
                {"law_symmetric", v.law_symmetric},
                {"degrees", v.degrees},
                {"listed_degrees", v.listed_degrees},
                {"z1_diff", to_json(v.z[0], 6, xy)},
                {"z2_diff", to_json(v.z[1], 6, xy)},
                {"z3_diff", to_json(v.z[2], 6, xy)}};
}

inline Json to_json(const DegreeProfile& d) {
    return Json{{"total", d.total}, {"blocks", d.blocks}, {"others_zero", d.others_zero}};
}

inline Json to_json(const Example2Verdict& v) {
    return Json{{"convention", std::string(to_string(v.convention))},
                {"listing_intact", v.listing_intact},
                {"listing_repeated_monomials", v.listing_repeated_monomials},
                {"m1_exact", v.m1.exact},
                {"profile_ok", v.profile_ok()},
                {"profile", to_json(v.ours)},
                {"listed_profile", to_json(v.listed)},
                {"expected_profile", to_json(v.expected)},
                {"eval_trials", v.eval_trials},
                {"eval_mismatches", v.eval_mismatches},
                {"m1_diff", to_json(v.m1, 9, VarNames::xyz())}};
}

}  // namespace io

}  // namespace hlg

#endif  // HLG_VERIFY_HPP
