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

#ifndef HLG_CLI_HPP
#define HLG_CLI_HPP

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autos.hpp"
#include "error.hpp"
#include "groebner.hpp"
#include "group.hpp"
#include "inversion.hpp"
#include "pairing.hpp"
#include "selftest.hpp"
#include "serialize.hpp"
#include "verify.hpp"

// Command-line front end. run_cli() is the whole program; main() only
// forwards argv so the commands can be driven in-process by tests.

namespace hlg::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::TermBudgetExceeded:
        case ErrorKind::RetriesExhausted:
        case ErrorKind::IterationCapExceeded: return kBudget;
        default: return kInvalid;
    }
}

struct Options {
    std::uint64_t p = 1801;
    unsigned n = 3;
    unsigned d = 2;
    unsigned k = 3;
    std::uint64_t seed = 1;
    double sparsity = 1.0;
    std::string convention = "lambda2-first";
    std::string retraction = "pivot";
    std::size_t max_terms = 0;
    unsigned max_retries = kDefaultMaxRetries;
    std::string out;
    std::string trapdoor;
    std::string public_path;
    std::string pairing;
    std::vector<std::string> points;
    std::uint64_t scalar = 0;
    std::string tstar = "auto";
    std::string oracle = "exact";
    unsigned trials = 1000;
};

/// "pivot" or "index:<i>" with i counted from 1.
inline std::optional<unsigned> parse_retraction(const std::string& s) {
    if (s == "pivot") return std::nullopt;
    if (s.rfind("index:", 0) == 0) {
        try {
            const unsigned long i = std::stoul(s.substr(6));
            if (i >= 1) return static_cast<unsigned>(i - 1);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::InvalidInput, "--retraction must be 'pivot' or 'index:<i>' with i >= 1");
}

inline std::vector<Convention> parse_conventions(const std::string& s, bool allow_both) {
    if (allow_both && s == "both") return {Convention::Lambda2First, Convention::Lambda1First};
    return {parse_convention(s)};
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Hidden-line curve groups, their polynomial laws, pairings and inversion"};
        app.name("hlg");
        app.require_subcommand(1);
        app.fallthrough();
        add_common(app);

        auto sub = [&](const char* name, const char* help, std::function<int()> fn) {
            CLI::App* s = app.add_subcommand(name, help);
            s->fallthrough();
            s->callback([this, fn] { code_ = fn(); });
        };
        sub("gen-group", "sample a trapdoor (and optionally its public description)", [&] { return gen_group(); });
        sub("law", "synthesize the public group law from a trapdoor", [&] { return law(); });
        sub("add", "add two points", [&] { return add(); });
        sub("smul", "multiply a point by --scalar", [&] { return smul(); });
        sub("neg", "negate a point", [&] { return neg(); });
        sub("dlog", "discrete log of the first --point to base the second (default: generator)", [&] { return dlog(); });
        sub("member", "test whether --point lies on the curve", [&] { return member_cmd(); });
        sub("pair-gen", "sample a k-linear pairing", [&] { return pair_gen(); });
        sub("pair-eval", "evaluate the pairing on k points", [&] { return pair_eval_cmd(); });
        sub("pair-expand", "expand the pairing into polynomials", [&] { return pair_expand_cmd(); });
        sub("pair-check", "sampled multilinearity check", [&] { return pair_check(); });
        sub("invert", "recover theta^{-1}(Q) from the forward map and a dlog oracle", [&] { return invert_cmd(); });
        sub("keyspace", "key-space size report", [&] { return keyspace_cmd(); });
        sub("implicitize", "equations of the curve of a trapdoor", [&] { return implicitize(); });
        sub("verify-example1", "check the worked GF(1801) example", [&] { return verify1(); });
        sub("verify-example2", "check the worked trilinear example", [&] { return verify2(); });
        sub("selftest", "sampled property checks of every module", [&] { return selftest(); });

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            emit_error("InvalidInput", e.what());
            return kInvalid;
        } catch (const TermBudgetExceeded& e) {
            emit_error(std::string(to_string(e.kind())), e.what(), {{"partial_terms", e.partial_terms()}, {"budget", e.budget()}});
            return kBudget;
        } catch (const Error& e) {
            emit_error(std::string(to_string(e.kind())), e.what());
            return exit_code_for(e.kind());
        } catch (const std::exception& e) {
            emit_error("InvalidInput", e.what());
            return kInvalid;
        }
        return code_;
    }

private:
    void add_common(CLI::App& app) {
        app.add_option("--p", o_.p, "prime modulus")->capture_default_str();
        app.add_option("--n", o_.n, "dimension of the ambient space")->capture_default_str();
        app.add_option("--d", o_.d, "degree bound of the triangular part")->capture_default_str();
        app.add_option("--k", o_.k, "pairing arity")->capture_default_str();
        app.add_option("--seed", o_.seed, "random seed")->capture_default_str();
        app.add_option("--sparsity", o_.sparsity, "probability of keeping each triangular monomial")->capture_default_str();
        app.add_option("--convention", o_.convention, "lambda2-first, lambda1-first (verify commands also accept both)")
            ->capture_default_str();
        app.add_option("--retraction", o_.retraction, "pivot or index:<i> (1-based)")->capture_default_str();
        app.add_option("--max-terms", o_.max_terms, "term budget per polynomial");
        app.add_option("--max-retries", o_.max_retries, "inversion retries")->capture_default_str();
        app.add_option("--out", o_.out, "write the result here instead of stdout");
        app.add_option("--trapdoor", o_.trapdoor, "trapdoor JSON file");
        app.add_option("--public", o_.public_path, "public group JSON file");
        app.add_option("--pairing", o_.pairing, "pairing JSON file");
        app.add_option("--point", o_.points, "point as comma-separated residues (repeatable)");
        app.add_option("--scalar", o_.scalar, "scalar for smul");
        app.add_option("--tstar", o_.tstar, "auto or a residue outside {0, 1}")->capture_default_str();
        app.add_option("--oracle", o_.oracle, "exact or interpolate")->capture_default_str();
        app.add_option("--trials", o_.trials, "trial count for pair-check")->capture_default_str();
    }

    // --- plumbing ---------------------------------------------------------

    void emit(const io::Json& j) {
        const std::string text = io::dump(j);
        if (o_.out.empty()) out_ << text;
        else io::write_file(o_.out, text);
    }

    void emit_error(const std::string& kind, const std::string& msg, io::Json extra = io::Json::object()) {
        io::Json j{{"error", kind}, {"message", msg}};
        for (auto& [key, v] : extra.items()) j[key] = v;
        out_ << io::dump(j);
    }

    void apply_budget() const {
        if (o_.max_terms) set_term_budget(o_.max_terms);
    }

    Trapdoor load_trapdoor() const {
        if (o_.trapdoor.empty()) throw Error(ErrorKind::InvalidInput, "--trapdoor is required");
        return io::trapdoor_from_json(io::read_json_file(o_.trapdoor));
    }

    MultilinearPairing load_pairing() const {
        if (o_.pairing.empty()) throw Error(ErrorKind::InvalidInput, "--pairing is required");
        return io::pairing_from_json(io::read_json_file(o_.pairing));
    }

    /// Law mode from --public, trapdoor mode from --trapdoor; --public wins.
    std::pair<Group, Mode> load_group() const {
        if (!o_.public_path.empty()) {
            Group g(io::public_from_json(io::read_json_file(o_.public_path)));
            if (!g.has_mode(Mode::Law)) throw Error(ErrorKind::ModeUnavailable, "public file carries no group law");
            return {std::move(g), Mode::Law};
        }
        if (!o_.trapdoor.empty()) return {Group(load_trapdoor(), false), Mode::Trapdoor};
        throw Error(ErrorKind::InvalidInput, "--public or --trapdoor is required");
    }

    std::vector<GroupElement> points(std::uint64_t p, unsigned n, std::size_t count) const {
        if (o_.points.size() != count)
            throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(count) + " --point values, got " + std::to_string(o_.points.size()));
        std::vector<GroupElement> out;
        for (const auto& s : o_.points) out.push_back({io::parse_point(s, p, n)});
        return out;
    }

    static std::string mode_name(Mode m) { return m == Mode::Law ? "law" : "trapdoor"; }

    // --- commands ---------------------------------------------------------

    int gen_group() {
        apply_budget();
        const Convention conv = parse_convention(o_.convention);
        const Trapdoor t = trapdoor_random(checked_modulus(o_.p), o_.n, o_.d, o_.seed, o_.sparsity, conv, parse_retraction(o_.retraction));
        if (!o_.public_path.empty()) io::write_file(o_.public_path, io::dump(io::to_json(make_public(t, true))));
        emit(io::to_json(t));
        return kOk;
    }

    int law() {
        apply_budget();
        emit(io::to_json(make_public(load_trapdoor(), true)));
        return kOk;
    }

    int add() {
        auto [g, mode] = load_group();
        const auto pts = points(g.modulus(), g.public_part().n, 2);
        emit(io::Json{{"mode", mode_name(mode)}, {"result", g.add(pts[0], pts[1], mode).coords.raw()}});
        return kOk;
    }

    int smul() {
        auto [g, mode] = load_group();
        const auto pts = points(g.modulus(), g.public_part().n, 1);
        emit(io::Json{{"mode", mode_name(mode)}, {"scalar", o_.scalar}, {"result", g.scalar_mul(pts[0], o_.scalar, mode).coords.raw()}});
        return kOk;
    }

    int neg() {
        auto [g, mode] = load_group();
        const auto pts = points(g.modulus(), g.public_part().n, 1);
        emit(io::Json{{"mode", mode_name(mode)}, {"result", g.neg(pts[0], mode).coords.raw()}});
        return kOk;
    }

    int dlog() {
        const Trapdoor t = load_trapdoor();
        if (o_.points.empty() || o_.points.size() > 2) throw Error(ErrorKind::InvalidInput, "dlog takes one or two --point values");
        const GroupElement q{io::parse_point(o_.points[0], t.modulus(), t.dim())};
        const GroupElement base{o_.points.size() == 2 ? io::parse_point(o_.points[1], t.modulus(), t.dim()) : t.point(1)};
        emit(io::Json{{"dlog", dlog_trapdoor(t, q, base)}});
        return kOk;
    }

    int member_cmd() {
        const Trapdoor t = load_trapdoor();
        const auto pts = points(t.modulus(), t.dim(), 1);
        emit(io::Json{{"member", member(t, pts[0].coords)}});
        return kOk;
    }

    int pair_gen() {
        const std::uint64_t p = checked_modulus(o_.p);
        const Convention conv = parse_convention(o_.convention);
        Rng rng(o_.seed);
        const std::uint64_t s1 = rng.next(), s2 = rng.next();
        const MultilinearPairing pr(o_.k, trapdoor_random(p, o_.n, o_.d, s1, o_.sparsity, conv),
                                    trapdoor_random(p, o_.n, o_.d, s2, o_.sparsity, conv));
        emit(io::to_json(pr));
        return kOk;
    }

    int pair_eval_cmd() {
        const MultilinearPairing pr = load_pairing();
        emit(io::Json{{"result", pair_eval(pr, points(pr.modulus(), pr.source().dim(), pr.arity())).coords.raw()}});
        return kOk;
    }

    int pair_expand_cmd() {
        const MultilinearPairing pr = load_pairing();
        emit(io::to_json(pair_expand(pr, o_.max_terms ? o_.max_terms : kPairingTermBudget)));
        return kOk;
    }

    int pair_check() {
        const MultilinearityReport r = multilinearity_check(load_pairing(), o_.trials, o_.seed);
        emit(io::to_json(r));
        return r.failures ? kMismatch : kOk;
    }

    int invert_cmd() {
        apply_budget();
        const Trapdoor t = load_trapdoor();
        const PolyMap& fwd = t.theta().forward();
        FieldVector q;
        std::optional<FieldVector> planted;
        if (o_.points.empty()) {
            Rng rng(o_.seed ^ 0x9e3779b97f4a7c15ULL);
            planted = FieldVector(t.modulus(), t.dim());
            for (unsigned i = 0; i < t.dim(); ++i) (*planted)[i] = rng.below(t.modulus());
            q = fwd.evaluate(*planted);
        } else {
            q = points(t.modulus(), t.dim(), 1)[0].coords;
        }
        std::optional<Residue> tstar;
        if (o_.tstar != "auto") tstar = io::parse_point(o_.tstar, t.modulus(), 1)[0];
        OracleProvider oracle;
        if (o_.oracle == "exact") oracle = exact_provider(fwd);
        else if (o_.oracle == "interpolate") oracle = interpolating_provider(t.theta().inverse(), static_cast<unsigned>(std::max(1, fwd.total_degree())));
        else throw Error(ErrorKind::InvalidInput, "--oracle must be exact or interpolate");
        const InversionReport r = invert(fwd, q, oracle, o_.seed, o_.max_retries, tstar);
        io::Json j = io::to_json(r);
        j["target"] = q.raw();
        if (planted) j["planted"] = planted->raw();
        emit(j);
        return kOk;
    }

    int keyspace_cmd() {
        const std::uint64_t p = checked_modulus(o_.p);
        const KeyspaceReport r = keyspace(p, o_.d, o_.n);
        io::Json j = io::to_json(r);
        unsigned __int128 bound = 1;
        bool fits = true;
        for (std::uint64_t i = 0; i < r.lower_bound_exponent && fits; ++i) {
            bound *= p;
            fits = bound <= std::numeric_limits<std::uint64_t>::max();
        }
        j["lower_bound"] = fits ? io::Json(static_cast<std::uint64_t>(bound)) : io::Json(nullptr);
        try {
            const KeyspaceEnumeration e = enumerate_keyspace(p, o_.d, o_.n);
            j["enumeration"] = {{"pairs", e.pairs}, {"immersion_pairs", e.immersion_pairs}, {"group_structures", e.group_structures}};
        } catch (const Error&) {
            j["enumeration"] = nullptr;
        }
        emit(j);
        return kOk;
    }

    int implicitize() {
        apply_budget();
        const Trapdoor t = load_trapdoor();
        BuchbergerStats st;
        const IdealBasis b = implicitize_curve(t.curve(), &st);
        emit(io::Json{{"basis", io::to_json(b)}, {"stats", io::to_json(st)}});
        return kOk;
    }

    int verify1() {
        const auto convs = parse_conventions(o_.convention, true);
        const auto retraction = parse_retraction(o_.retraction);
        io::Json reports = io::Json::array();
        bool z3_ok = true, degree4_somewhere = false, intact = true;
        for (Convention c : convs) {
            const Example1Verdict v = verify_example1(c, retraction);
            z3_ok = z3_ok && v.z3_structural();
            degree4_somewhere = degree4_somewhere || v.z12_degree4;
            intact = intact && v.listings_intact;
            for (int i = 0; i < 3; ++i)
                if (!v.z[i].exact)
                    err_ << "warning: " << to_string(c) << " z" << i + 1 << " differs from the listing in " << v.z[i].differing_terms
                         << " terms\n";
            reports.push_back(io::to_json(v));
        }
        const bool ok = z3_ok && intact;
        emit(io::Json{{"structural_ok", ok}, {"z12_degree4_any_convention", degree4_somewhere}, {"reports", std::move(reports)}});
        return ok ? kOk : kMismatch;
    }

    int verify2() {
        const auto convs = parse_conventions(o_.convention, true);
        io::Json reports = io::Json::array();
        bool ok = true;
        for (Convention c : convs) {
            const Example2Verdict v = verify_example2(c, 200, o_.seed);
            ok = ok && v.profile_ok() && v.eval_mismatches == 0 && v.listing_intact;
            if (!v.m1.exact)
                err_ << "warning: " << to_string(c) << " first output differs from the listing in " << v.m1.differing_terms << " terms\n";
            reports.push_back(io::to_json(v));
        }
        emit(io::Json{{"structural_ok", ok}, {"reports", std::move(reports)}});
        return ok ? kOk : kMismatch;
    }

    int selftest() {
        io::Json cases = io::Json::array();
        bool ok = true;
        for (const auto& c : run_selftest(o_.seed)) {
            ok = ok && c.failures == 0;
            io::Json j{{"module", c.module}, {"property", c.property}, {"checks", c.checks}, {"failures", c.failures}};
            if (!c.error.empty()) j["error"] = c.error;
            cases.push_back(std::move(j));
        }
        emit(io::Json{{"ok", ok}, {"cases", std::move(cases)}});
        return ok ? kOk : kMismatch;
    }

    std::ostream& out_;
    std::ostream& err_;
    Options o_;
    int code_ = kOk;
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Runner(out, err).run(argc, argv);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hlg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hlg::cli

#endif  // HLG_CLI_HPP
