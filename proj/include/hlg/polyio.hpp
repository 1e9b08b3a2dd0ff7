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

#ifndef HLG_POLYIO_HPP
#define HLG_POLYIO_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ffield.hpp"
#include "mpoly.hpp"

namespace hlg {

/// Variable naming: the ring's variables are split into equal blocks, one
/// per name. With names {"x", "y"} and 6 variables, x1..x3 are variables 0..2
/// and y1..y3 are 3..5. A block of size one prints as its bare name.
struct VarNames {
    std::vector<std::string> blocks{"x"};

    static VarNames xy() { return {{"x", "y"}}; }
    static VarNames xyz() { return {{"x", "y", "z"}}; }
    static VarNames single(std::string name) { return {{std::move(name)}}; }

    unsigned block_size(unsigned nvars) const {
        if (blocks.empty() || nvars % blocks.size() != 0)
            throw Error(ErrorKind::InvalidInput, "variable count is not divisible by the number of name blocks");
        return nvars / static_cast<unsigned>(blocks.size());
    }

    std::string name(unsigned var, unsigned nvars) const {
        const unsigned bs = block_size(nvars);
        const std::string& base = blocks[var / bs];
        return bs == 1 ? base : base + std::to_string(var % bs + 1);
    }
};

/// Canonical text: `c*x1^e1*x2` terms in storage order joined by " + ".
/// Exponents of 1 are omitted; coefficients always appear. Zero prints as "0".
inline std::string to_text(const SparsePoly& f, const VarNames& names = {}) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) s += " + ";
        first = false;
        s += std::to_string(t.coeff);
        for (unsigned i = 0; i < f.nvars(); ++i) {
            const unsigned e = t.mono.exponent(i);
            if (!e) continue;
            s += '*';
            s += names.name(i, f.nvars());
            if (e > 1) {
                s += '^';
                s += std::to_string(e);
            }
        }
    }
    return s;
}

/// A bare monomial, "1" for the unit.
inline std::string monomial_text(const Monomial& m, unsigned nvars, const VarNames& names = {}) {
    std::string s;
    for (unsigned i = 0; i < nvars; ++i) {
        const unsigned e = m.exponent(i);
        if (!e) continue;
        if (!s.empty()) s += '*';
        s += names.name(i, nvars);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view src, unsigned nvars, std::uint64_t p, const VarNames& names)
        : s_(src), nvars_(nvars), p_(p), names_(names), bs_(names.block_size(nvars)) {}

    std::vector<Term> parse_terms() {
        std::vector<Term> terms;
        skip();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = get() == '-';
            skip();
        }
        if (at_end()) fail("empty polynomial");
        for (;;) {
            Term t = term();
            if (negate) t.coeff = rneg(t.coeff, p_);
            terms.push_back(t);
            skip();
            if (at_end()) break;
            const char c = get();
            if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
            negate = c == '-';
            skip();
        }
        return terms;
    }

private:
    Term term() {
        Term t{Monomial{}, 1 % p_};
        bool any = false;
        for (;;) {
            skip();
            if (at_end()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff = rmul(t.coeff, number() % p_, p_);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                const unsigned v = variable();
                unsigned e = 1;
                skip();
                if (peek() == '^') {
                    get();
                    skip();
                    e = static_cast<unsigned>(number());
                }
                const unsigned total = t.mono.exponent(v) + e;
                if (total > kMaxExponent) fail("exponent above 127");
                t.mono.set(v, total);
            } else {
                break;
            }
            any = true;
            skip();
            if (peek() == '*') {
                get();
                continue;
            }
        }
        if (!any) fail("expected a term");
        return t;
    }

    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned __int128 v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = (v * 10 + static_cast<unsigned>(get() - '0')) % p_;
        }
        return static_cast<std::uint64_t>(v);
    }

    unsigned variable() {
        std::string name;
        while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
            const char c = get();
            if (c != '_') name += c;
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        for (unsigned b = 0; b < names_.blocks.size(); ++b) {
            if (names_.blocks[b] != name) continue;
            unsigned idx = 1;
            if (!digits.empty()) idx = static_cast<unsigned>(std::stoul(digits));
            else if (bs_ != 1) fail("variable '" + name + "' needs an index");
            if (idx < 1 || idx > bs_) fail("variable index out of range: " + name + digits);
            return b * bs_ + idx - 1;
        }
        fail("unknown variable '" + name + digits + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }

    std::string_view s_;
    std::size_t pos_ = 0;
    unsigned nvars_;
    std::uint64_t p_;
    const VarNames& names_;
    unsigned bs_;
};

}  // namespace detail

/// Parses sums of products of coefficients and variables. Accepts `*` or
/// whitespace between factors, `+`/`-` between terms, repeated monomials,
/// and coefficients of any size (reduced mod p).
inline SparsePoly parse_poly(std::string_view text, unsigned nvars, std::uint64_t p, const VarNames& names = {}) {
    return SparsePoly::from_terms(nvars, p, detail::PolyParser(text, nvars, p, names).parse_terms());
}

/// The summands exactly as written: no merging of repeated monomials and no
/// dropping of zero coefficients.
inline std::vector<Term> parse_terms(std::string_view text, unsigned nvars, std::uint64_t p, const VarNames& names = {}) {
    return detail::PolyParser(text, nvars, p, names).parse_terms();
}

}  // namespace hlg

#endif  // HLG_POLYIO_HPP
