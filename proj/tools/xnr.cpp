/*
   Copyright 2026 The xnr-codes Authors

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

// xnr: command-line front end. Results go to files and (with --json) stdout, progress to stderr.

#include <omp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xnr/agcode.hpp"
#include "xnr/bounds.hpp"
#include "xnr/curve.hpp"
#include "xnr/error.hpp"
#include "xnr/records.hpp"
#include "xnr/report.hpp"

namespace {

using namespace xnr;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kValidation = 2, kConsistency = 3, kBudget = 4 };

struct CurveArgs {
    std::uint64_t q = 2;
    std::uint32_t n = 0, r = 0;
    std::optional<std::uint32_t> s;
    std::string gs;
    bool full = false;
    std::string model = "high-minus-low";
    std::string modulus;  // "c0,c1,...,1" over GF(p)
};

struct Common {
    std::string out = ".";
    bool json = false;
    int workers = 0;
    std::size_t max_steps = 100000;
};

void add_curve_options(CLI::App* sub, CurveArgs& c) {
    sub->add_option("--q", c.q, "base field size (prime power)")->capture_default_str();
    sub->add_option("--n", c.n, "extension degree")->required();
    sub->add_option("--r", c.r, "exponent r, coprime to n")->required();
    auto* s = sub->add_option("--s", c.s, "subcover via the default trace split");
    auto* gs = sub->add_option("--gs", c.gs, "subcover polynomial, e.g. \"y^4 + a^18*y^2 + a*y\"");
    auto* full = sub->add_flag("--full", c.full, "the full curve, g_s = T_n");
    s->excludes(gs)->excludes(full);
    gs->excludes(full);
    sub->add_option("--model", c.model, "high-minus-low, low-minus-high or trace")
        ->check(CLI::IsMember({"high-minus-low", "low-minus-high", "trace"}))
        ->capture_default_str();
    sub->add_option("--modulus", c.modulus, "field modulus coefficients c0,...,cd (default: Conway)");
}

std::uint32_t prime_of(std::uint64_t q, std::uint32_t& e) {
    if (q < 2) throw ValidationError("q must be at least 2");
    std::uint64_t p = 2;
    while (q % p) ++p;
    e = 0;
    for (std::uint64_t t = q; t > 1; t /= p, ++e)
        if (t % p) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
    return static_cast<std::uint32_t>(p);
}

CurvePtr build_curve(const CurveArgs& a) {
    std::uint32_t e = 0;
    const std::uint32_t p = prime_of(a.q, e);
    if (a.n < 2) throw ValidationError("n must be at least 2");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!a.modulus.empty()) {
        std::vector<std::uint32_t> c;
        std::stringstream ss(a.modulus);
        for (std::string tok; std::getline(ss, tok, ',');) c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        modulus = c;
    }
    const FieldPtr F = Field::create(p, e * a.n, modulus);
    const Model model = a.model == "trace"            ? Model::TraceForm
                        : a.model == "low-minus-high" ? Model::LowMinusHigh
                                                      : Model::HighMinusLow;
    if (!a.gs.empty()) return Curve::create(a.n, a.r, parse_qpoly(F, a.q, a.gs), model);
    if (a.s && *a.s != a.n - 1) return Curve::subcover(F, a.q, a.n, a.r, *a.s, model);
    return Curve::full(F, a.q, a.n, a.r, model);
}

void emit(const Common& cm, const std::string& file, const ordered_json& j) {
    std::filesystem::create_directories(cm.out);
    std::ofstream(std::filesystem::path(cm.out) / file) << j.dump(2) << '\n';
    if (cm.json) std::cout << j.dump(2) << '\n';
}

int cmd_curve(const CurveArgs& ca, const Common& cm) {
    const CurvePtr C = build_curve(ca);
    std::cerr << "curve: " << C->describe() << ", " << C->points().size() << " affine points\n";
    const WeierstrassData wd = weierstrass_semigroup(C, 0, cm.max_steps);
    emit(cm, "curve.json", curve_json(*C, wd));
    if (!cm.json)
        std::cout << "genus " << C->genus() << ", " << C->points().size() + 1 << " points, semigroup <"
                  << [&] {
                         std::string s;
                         for (auto g : wd.semigroup.minimal_generators()) s += (s.empty() ? "" : ",") + std::to_string(g);
                         return s;
                     }() << ">\n";
    return kOk;
}

int cmd_semigroup(const CurveArgs& ca, const Common& cm, const std::vector<std::uint64_t>& gens) {
    ordered_json j;
    if (!gens.empty()) {
        j = semigroup_json(NumericalSemigroup(gens));
        const TelescopicResult t = sg_telescopic(gens);
        if (const auto* cert = std::get_if<TelescopicCertificate>(&t)) {
            j["given_order"] = {{"telescopic", true}, {"d", cert->d}, {"largest_gap", cert->largest_gap},
                                {"genus", cert->genus}};
        } else {
            const auto& ref = std::get<TelescopicRefusal>(t);
            j["given_order"] = {{"telescopic", false}, {"failing_index", ref.failing_index}, {"reason", ref.reason}};
        }
    } else {
        const CurvePtr C = build_curve(ca);
        const WeierstrassData wd = weierstrass_semigroup(C, 0, cm.max_steps);
        j = semigroup_json(wd.semigroup);
        ordered_json claims = ordered_json::object();
        for (const auto& [label, g] : wd.claims) claims[label] = g;
        j["claims"] = claims;
        j["apery_steps"] = wd.apery.steps;
    }
    emit(cm, "semigroup.json", j);
    if (!cm.json) std::cout << "genus " << j["genus"] << ", frobenius " << j["frobenius"] << '\n';
    return kOk;
}

BasisRoute parse_route(const std::string& s) {
    return s == "telescopic" ? BasisRoute::Telescopic : s == "discovery" ? BasisRoute::Discovery : BasisRoute::Auto;
}

int cmd_code(const CurveArgs& ca, const Common& cm, std::uint64_t m, bool exact, double budget,
             std::optional<std::size_t> shorten, const std::string& route) {
    const CurvePtr C = build_curve(ca);
    std::cerr << "code: building L(" << m << " P) on " << C->describe() << '\n';
    const OnePointCode code = code_new(C, m, parse_route(route));
    const std::uint64_t u = code.length();
    LinearCode lc = code.code;
    if (shorten) lc = code_shorten(code.code, *shorten);

    std::optional<std::uint64_t> d;
    ordered_json extra;
    if (exact) {
        // the Goppa floor only holds for the unshortened code below the length
        const std::uint64_t floor = (!shorten && m < u) ? u - m : 0;
        std::cerr << "code: exact distance search\n";
        const DistanceResult dr = code_distance(lc, budget, floor);
        d = dr.exact;
        if (!dr.exact) extra["refusal"] = "message space of 2^" + std::to_string(dr.log2_work) + " exceeds the budget";
    }
    BoundReport br = bound_report(code.semigroup, u, code.dimension(), m, shorten ? std::nullopt : d);
    ordered_json j = code_json(br);
    if (shorten) {
        j["shortened"] = {{"s", *shorten}, {"length", lc.length()}, {"k", lc.dimension()},
                          {"exact_distance", d ? ordered_json(*d) : ordered_json(nullptr)}};
    }
    for (auto& [key, v] : extra.items()) j[key] = v;

    std::filesystem::create_directories(cm.out);
    {
        std::ofstream csv(std::filesystem::path(cm.out) / "code.csv");
        write_matrix_csv(csv, lc, *C, m);
    }
    emit(cm, "code.json", j);
    if (!cm.json) {
        std::cout << "[" << lc.length() << "," << lc.dimension();
        if (d) std::cout << "," << *d;
        std::cout << "] d* = " << br.dstar.value;
        if (exact && !d) std::cout << " (exact search refused: over budget)";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_bounds(const CurveArgs& ca, const Common& cm, std::optional<std::uint64_t> m) {
    const CurvePtr C = build_curve(ca);
    const WeierstrassData wd = weierstrass_semigroup(C, 0, cm.max_steps);
    const HStar hs = hstar(wd.semigroup, C->points().size());
    ordered_json j = hstar_json(hs);
    if (m) {
        const OnePointCode code = code_new(C, *m, BasisRoute::Auto, &wd);
        j["code"] = code_json(bound_report(wd.semigroup, code.length(), code.dimension(), *m));
    }
    emit(cm, "bounds.json", j);
    if (!cm.json) {
        std::cout << "|H*| = " << hs.elems.size();
        if (m) std::cout << ", d*(" << *m << ") = " << j["code"]["dstar"];
        std::cout << '\n';
    }
    return kOk;
}

int cmd_witness(const CurveArgs& ca, const Common& cm, int kind, std::uint64_t a, std::uint64_t b) {
    Witness w;
    if (kind == 2) {
        CurveArgs t = ca;
        t.model = "trace";
        const CurvePtr C = build_curve(t);
        w = witness_lines_and_fibres(C->field(), C->q(), C->n(), C->r(), a, b);
    } else {
        const CurvePtr C = build_curve(ca);
        w = kind == 1 ? witness_lines(C, a) : witness_duality(C, b);
    }
    emit(cm, "witness.json", witness_json(w));
    if (!cm.json) {
        std::cout << "m = " << w.m << ", weight ";
        if (w.weight) std::cout << *w.weight; else std::cout << "n/a";
        std::cout << ", u - m = " << w.expected << (w.note.empty() ? "" : " (" + w.note + ")") << '\n';
    }
    return kOk;
}

int cmd_records(const Common& cm, const std::string& only) {
    const RecordSet set = only == "s2" ? RecordSet::S2 : only == "s3" ? RecordSet::S3 : RecordSet::All;
    const std::size_t want = set == RecordSet::S2 ? 16 : set == RecordSet::S3 ? 92 : 108;
    const RecordLedger L = records_enumerate(set, &std::cerr);
    std::filesystem::create_directories(cm.out);
    {
        std::ofstream csv(std::filesystem::path(cm.out) / "ledger.csv");
        write_ledger_csv(csv, L);
    }
    if (cm.json) std::cout << ledger_json(L).dump(2) << '\n';
    else std::cout << L.rows.size() << " triples\n";
    if (L.rows.size() != want) {
        std::cerr << "expected " << want << " triples, got " << L.rows.size() << '\n';
        return kConsistency;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves X_{n,r}, their subcovers, Weierstrass semigroups and one-point AG codes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value file with defaults; flags win");

    Common cm;
    app.add_option("--out", cm.out, "output directory")->capture_default_str();
    app.add_flag("--json", cm.json, "mirror the report to stdout");
    app.add_option("--workers", cm.workers, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-steps", cm.max_steps, "cap on basis reduction steps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CurveArgs ca;
    auto* curve = app.add_subcommand("curve", "curve report: genus, points, semigroup, basis sample");
    add_curve_options(curve, ca);

    auto* semi = app.add_subcommand("semigroup", "Weierstrass semigroup of a curve, or analysis of given generators");
    std::vector<std::uint64_t> gens;
    semi->add_option("--gens", gens, "generators in the order to test for telescopicity")->delimiter(',');
    semi->add_option("--q", ca.q);
    semi->add_option("--n", ca.n);
    semi->add_option("--r", ca.r);
    semi->add_option("--s", ca.s);
    semi->add_option("--gs", ca.gs);
    semi->add_flag("--full", ca.full);
    semi->add_option("--model", ca.model)->check(CLI::IsMember({"high-minus-low", "low-minus-high", "trace"}));
    semi->add_option("--modulus", ca.modulus);

    auto* code = app.add_subcommand("code", "one-point code: generator matrix CSV and bound report");
    add_curve_options(code, ca);
    std::uint64_t m = 0;
    bool exact = false;
    double budget = 1e10;
    std::optional<std::size_t> shorten;
    std::string route = "auto";
    code->add_option("--m", m, "multiple of the point at infinity")->required();
    code->add_flag("--exact", exact, "compute the exact minimum distance when within budget");
    code->add_option("--budget", budget, "largest message space searched by --exact")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    code->add_option("--shorten", shorten, "shorten on the first S coordinates");
    code->add_option("--route", route, "basis route")->check(CLI::IsMember({"auto", "telescopic", "discovery"}));

    auto* bounds = app.add_subcommand("bounds", "H*, Lambda* sizes and the order bound");
    add_curve_options(bounds, ca);
    std::optional<std::uint64_t> bm;
    bounds->add_option("--m", bm, "also report the code C_m");

    auto* witness = app.add_subcommand("witness", "explicit low-weight codewords on a full curve");
    add_curve_options(witness, ca);
    int kind = 1;
    std::uint64_t wa = 0, wb = 0;
    witness->add_option("--case", kind, "1 lines, 2 lines and trace fibres, 3 duality report")
        ->check(CLI::Range(1, 3));
    witness->add_option("--a", wa);
    witness->add_option("--b", wb);

    auto* records = app.add_subcommand("records", "ledger of record code parameters over GF(32)");
    std::string only = "all";
    records->add_option("--only", only, "all, s2 (subcover s = 2) or s3 (subcover s = 3)")
        ->check(CLI::IsMember({"all", "s2", "s3"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kValidation;
    }
    if (cm.workers > 0) omp_set_num_threads(cm.workers);

    try {
        if (*curve) return cmd_curve(ca, cm);
        if (*semi) {
            if (gens.empty() && (ca.n == 0 || ca.r == 0)) throw ValidationError("give --gens or a curve (--n, --r)");
            return cmd_semigroup(ca, cm, gens);
        }
        if (*code) return cmd_code(ca, cm, m, exact, budget, shorten, route);
        if (*bounds) return cmd_bounds(ca, cm, bm);
        if (*witness) return cmd_witness(ca, cm, kind, wa, wb);
        if (*records) return cmd_records(cm, only);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return kConsistency;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kConsistency;
    }
    return kOk;
}
