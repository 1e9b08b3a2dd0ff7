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

#ifndef HLG_SERIALIZE_HPP
#define HLG_SERIALIZE_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "autos.hpp"
#include "error.hpp"
#include "ffield.hpp"
#include "groebner.hpp"
#include "group.hpp"
#include "inversion.hpp"
#include "mpoly.hpp"
#include "pairing.hpp"
#include "polyio.hpp"

// JSON forms of every artifact. Keys are emitted in a fixed order and terms
// in canonical order, so write(read(s)) == s for anything this file wrote.

namespace hlg::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, std::string_view key) {
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected an object holding '" + std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorKind::ParseError, "missing field '" + std::string(key) + "'");
    return *it;
}

inline std::uint64_t uint_field(const Json& j, std::string_view key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw Error(ErrorKind::ParseError, "field '" + std::string(key) + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

inline std::vector<Residue> residues(const Json& j, std::uint64_t p) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of residues");
    std::vector<Residue> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, "residues must be integers");
        out.push_back(x.is_number_unsigned() ? x.get<std::uint64_t>() % p : rreduce(x.get<std::int64_t>(), p));
    }
    return out;
}

}  // namespace detail

// --- points ---------------------------------------------------------------

inline Json to_json(const FieldVector& v) { return Json(v.raw()); }

inline FieldVector vector_from_json(const Json& j, std::uint64_t p) { return FieldVector(p, detail::residues(j, p)); }

/// "a,b,c" -> vector; whitespace around entries is ignored; negatives reduce mod p.
inline FieldVector parse_point(std::string_view s, std::uint64_t p, std::optional<unsigned> n = std::nullopt) {
    std::vector<Residue> v;
    std::string item;
    std::stringstream ss{std::string(s)};
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad point entry '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error(ErrorKind::ParseError, "bad point entry '" + item + "'");
        v.push_back(rreduce(x, p));
    }
    if (v.empty()) throw Error(ErrorKind::ParseError, "empty point");
    if (n && v.size() != *n)
        throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(v.size()) + " entries, expected " + std::to_string(*n));
    return FieldVector(p, std::move(v));
}

// --- polynomials ----------------------------------------------------------

inline Json to_json(const SparsePoly& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(Json{{"c", t.coeff}, {"e", t.mono.exponents(f.nvars())}});
    return Json{{"p", f.modulus()}, {"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

inline SparsePoly poly_from_json(const Json& j) {
    const std::uint64_t p = checked_modulus(detail::uint_field(j, "p"));
    const auto n = static_cast<unsigned>(detail::uint_field(j, "nvars"));
    if (n == 0 || n > kMaxVars) throw Error(ErrorKind::InvalidInput, "nvars must be in 1..32");
    const Json& terms = detail::field(j, "terms");
    if (!terms.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
    std::vector<Term> out;
    for (const auto& t : terms) {
        const Json& e = detail::field(t, "e");
        if (!e.is_array() || e.size() != n) throw Error(ErrorKind::ParseError, "exponent vector length must equal nvars");
        std::vector<unsigned> ex;
        for (const auto& x : e) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() > kMaxExponent)
                throw Error(ErrorKind::ParseError, "exponents must be integers in 0..127");
            ex.push_back(x.get<unsigned>());
        }
        const Json& c = detail::field(t, "c");
        if (!c.is_number_integer()) throw Error(ErrorKind::ParseError, "coefficients must be integers");
        const Residue cr = c.is_number_unsigned() ? c.get<std::uint64_t>() % p : rreduce(c.get<std::int64_t>(), p);
        out.push_back({Monomial::from_exponents(ex), cr});
    }
    return SparsePoly::from_terms(n, p, std::move(out));
}

inline Json polys_to_json(const std::vector<SparsePoly>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(to_json(f));
    return a;
}

inline std::vector<SparsePoly> polys_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of polynomials");
    std::vector<SparsePoly> out;
    for (const auto& x : j) out.push_back(poly_from_json(x));
    return out;
}

inline Json to_json(const PolyMap& f) {
    return Json{{"p", f.modulus()}, {"in_vars", f.in_vars()}, {"polys", polys_to_json(f.components())}};
}

inline PolyMap map_from_polys(const std::vector<SparsePoly>& c) {
    if (c.empty()) throw Error(ErrorKind::InvalidInput, "map needs at least one component");
    return PolyMap(c.front().nvars(), c.front().modulus(), c);
}

inline PolyMap map_from_json(const Json& j) {
    const auto in = static_cast<unsigned>(detail::uint_field(j, "in_vars"));
    const std::uint64_t p = checked_modulus(detail::uint_field(j, "p"));
    std::vector<SparsePoly> c = polys_from_json(detail::field(j, "polys"));
    for (const auto& f : c)
        if (f.nvars() != in || f.modulus() != p) throw Error(ErrorKind::ArityMismatch, "component does not match the map header");
    return PolyMap(in, p, std::move(c));
}

// --- automorphisms --------------------------------------------------------

inline Json to_json(const AffineLinearMap& a) {
    Json m = Json::array();
    for (unsigned r = 0; r < a.dim(); ++r) m.push_back(a.linear().row(r).raw());
    return Json{{"m", std::move(m)}, {"b", a.offset().raw()}};
}

inline AffineLinearMap affine_from_json(const Json& j, std::uint64_t p) {
    const Json& m = detail::field(j, "m");
    if (!m.is_array() || m.empty()) throw Error(ErrorKind::ParseError, "'m' must be a non-empty array of rows");
    std::vector<FieldVector> rows;
    for (const auto& r : m) {
        rows.push_back(vector_from_json(r, p));
        if (rows.back().size() != m.size()) throw Error(ErrorKind::ArityMismatch, "linear part must be square");
    }
    return AffineLinearMap(FieldMatrix::from_rows(p, rows), vector_from_json(detail::field(j, "b"), p));
}

inline Json to_json(const TameAutomorphism& t) {
    return Json{{"lambda1", to_json(t.lambda1())},
                {"tau", polys_to_json(t.tau().shifts())},
                {"lambda2", to_json(t.lambda2())},
                {"convention", std::string(to_string(t.convention()))}};
}

inline TameAutomorphism tame_from_json(const Json& j, std::uint64_t p, unsigned d) {
    const Json& conv = detail::field(j, "convention");
    if (!conv.is_string()) throw Error(ErrorKind::ParseError, "'convention' must be a string");
    return tame_build(affine_from_json(detail::field(j, "lambda1"), p), TriangularMap(polys_from_json(detail::field(j, "tau")), d),
                      affine_from_json(detail::field(j, "lambda2"), p), parse_convention(conv.get<std::string>()));
}

/// Tame automorphisms keep their factorization; others store both maps.
inline Json to_json(const Automorphism& a) {
    if (a.tame()) return to_json(*a.tame());
    return Json{{"forward", to_json(a.forward())}, {"inverse", to_json(a.inverse())}};
}

inline Automorphism automorphism_from_json(const Json& j, std::uint64_t p, unsigned d) {
    if (j.is_object() && j.contains("forward"))
        return Automorphism(map_from_json(detail::field(j, "forward")), map_from_json(detail::field(j, "inverse")));
    return Automorphism(tame_from_json(j, p, d));
}

// --- groups ---------------------------------------------------------------

inline Json to_json(const LinearImmersion& r) {
    Json j{{"a", r.direction().raw()}, {"b", r.offset().raw()}};
    if (r.explicit_retraction()) j["retraction"] = r.retraction_index();
    return j;
}

inline LinearImmersion immersion_from_json(const Json& j, std::uint64_t p) {
    std::optional<unsigned> idx;
    if (j.is_object() && j.contains("retraction")) idx = static_cast<unsigned>(detail::uint_field(j, "retraction"));
    return LinearImmersion(vector_from_json(detail::field(j, "a"), p), vector_from_json(detail::field(j, "b"), p), idx);
}

inline Json to_json(const Trapdoor& t) {
    return Json{{"p", t.modulus()}, {"n", t.dim()}, {"d", t.degree()}, {"immersion", to_json(t.immersion())}, {"theta", to_json(t.theta())}};
}

inline Trapdoor trapdoor_from_json(const Json& j) {
    const std::uint64_t p = checked_modulus(detail::uint_field(j, "p"));
    const auto n = static_cast<unsigned>(detail::uint_field(j, "n"));
    const auto d = static_cast<unsigned>(detail::uint_field(j, "d"));
    Trapdoor t(immersion_from_json(detail::field(j, "immersion"), p), automorphism_from_json(detail::field(j, "theta"), p, d), d);
    if (t.dim() != n) throw Error(ErrorKind::ArityMismatch, "trapdoor dimension does not match 'n'");
    return t;
}

inline Json to_json(const CurveGroup& g) {
    Json j{{"p", g.p}, {"n", g.n}, {"generator", g.generator.raw()}, {"identity", g.identity.raw()}};
    if (g.law) j["law"] = polys_to_json(g.law->components());
    if (g.negation) j["negation"] = polys_to_json(g.negation->components());
    return j;
}

inline CurveGroup public_from_json(const Json& j) {
    CurveGroup g;
    g.p = checked_modulus(detail::uint_field(j, "p"));
    g.n = static_cast<unsigned>(detail::uint_field(j, "n"));
    g.generator = vector_from_json(detail::field(j, "generator"), g.p);
    g.identity = vector_from_json(detail::field(j, "identity"), g.p);
    if (g.generator.size() != g.n || g.identity.size() != g.n) throw Error(ErrorKind::ArityMismatch, "points must have n entries");
    auto check = [&](const PolyMap& m, unsigned in) {
        if (m.in_vars() != in || m.out_dim() != g.n || m.modulus() != g.p)
            throw Error(ErrorKind::ArityMismatch, "published polynomials do not match the group header");
    };
    if (j.contains("law")) {
        g.law = map_from_polys(polys_from_json(j.at("law")));
        check(*g.law, 2 * g.n);
    }
    if (j.contains("negation")) {
        g.negation = map_from_polys(polys_from_json(j.at("negation")));
        check(*g.negation, g.n);
    }
    return g;
}

// --- pairings -------------------------------------------------------------

inline Json to_json(const MultilinearPairing& m) {
    return Json{{"k", m.arity()}, {"source", to_json(m.source())}, {"target", to_json(m.target())}};
}

inline MultilinearPairing pairing_from_json(const Json& j) {
    return MultilinearPairing(static_cast<unsigned>(detail::uint_field(j, "k")), trapdoor_from_json(detail::field(j, "source")),
                              trapdoor_from_json(detail::field(j, "target")));
}

inline Json to_json(const MultilinearityReport& r) {
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(Json{{"trial", x.trial}, {"slot", x.slot}, {"params", x.params}, {"extra", x.extra}});
    return Json{{"trials", r.trials}, {"checks", r.checks}, {"failures", r.failures}, {"witnesses", std::move(w)}};
}

// --- Groebner -------------------------------------------------------------

inline Json to_json(const MonomialOrder& o) {
    return Json{{"kind", std::string(to_string(o.kind))}, {"priority", o.priority}};
}

inline Json to_json(const IdealBasis& b) {
    return Json{{"order", to_json(b.order)}, {"reduced", b.reduced}, {"generators", polys_to_json(b.generators)}};
}

inline IdealBasis basis_from_json(const Json& j) {
    IdealBasis b;
    const Json& o = detail::field(j, "order");
    const std::string kind = detail::field(o, "kind").get<std::string>();
    if (kind == "lex") b.order.kind = MonomialOrder::Kind::Lex;
    else if (kind == "grevlex") b.order.kind = MonomialOrder::Kind::Grevlex;
    else throw Error(ErrorKind::ParseError, "unknown monomial order '" + kind + "'");
    b.order.priority = detail::field(o, "priority").get<std::vector<unsigned>>();
    b.reduced = detail::field(j, "reduced").get<bool>();
    b.generators = polys_from_json(detail::field(j, "generators"));
    return b;
}

inline Json to_json(const BuchbergerStats& s) {
    return Json{{"pairs_total", s.pairs_total},     {"pairs_skipped_coprime", s.pairs_skipped_coprime},
                {"reductions", s.reductions},       {"zero_reductions", s.zero_reductions},
                {"max_queue", s.max_queue},         {"basis_peak", s.basis_peak},
                {"max_degree", s.max_degree}};
}

// --- reports --------------------------------------------------------------

inline Json to_json(const KeyspaceReport& r) {
    return Json{{"p", r.p},
                {"d", r.d},
                {"n", r.n},
                {"triangular_count_exponent", r.triangular_count_exponent},
                {"immersion_count_exponent", r.immersion_count_exponent},
                {"lower_bound_exponent", r.lower_bound_exponent},
                {"entropy_bits_lower_bound", r.entropy_bits_lower_bound},
                {"published_triangular_exponent", r.published_triangular_exponent},
                {"published_bound_exponent", r.published_bound_exponent},
                {"published_formula_note", r.published_formula_note}};
}

inline Json to_json(const ConicFrame& c) {
    return Json{{"q0", c.q0.raw()},   {"q1", c.q1.raw()}, {"q", c.q.raw()},           {"tstar", c.tstar},
                {"a", c.a.raw()},     {"b", c.b.raw()},   {"u", to_json(c.u)},        {"v", to_json(c.v)},
                {"plane_eqs", polys_to_json(c.plane_eqs)}};
}

inline Json to_json(const InversionReport& r) {
    Json lead = Json::array();
    for (const auto& m : r.gb_leading) lead.push_back(m.exponents(r.n));
    Json j{{"seed", r.seed},
           {"attempts", r.attempts},
           {"retries", r.retries},
           {"tstar", r.tstar},
           {"conic", r.conic ? to_json(*r.conic) : Json(nullptr)},
           {"gb_shape", {{"size", r.gb_size}, {"leading_exponents", std::move(lead)}}},
           {"point", r.point.raw()},
           {"forward_check", r.forward_check},
           {"max_gb_degree", r.max_gb_degree},
           {"max_input_degree", r.max_input_degree},
           {"witness_degree", r.witness_degree},
           {"failures", r.failures}};
    return j;
}

// --- files ----------------------------------------------------------------

/// Canonical text of a JSON document: two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

}  // namespace hlg::io

#endif  // HLG_SERIALIZE_HPP
