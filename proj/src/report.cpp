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

#include "xnr/report.hpp"

#include <algorithm>

namespace xnr {

using nlohmann::ordered_json;

ordered_json semigroup_json(const NumericalSemigroup& S) {
    ordered_json j;
    j["generators"] = S.generators();
    j["minimal_generators"] = S.minimal_generators();
    j["genus"] = S.genus();
    j["frobenius"] = S.frobenius();
    j["symmetric"] = S.is_symmetric();
    const TelescopicResult t = sg_telescopic_sorted(S.minimal_generators());
    if (const auto* cert = std::get_if<TelescopicCertificate>(&t))
        j["telescopic_order"] = cert->sequence;
    else
        j["telescopic_order"] = nullptr;
    return j;
}

ordered_json qpoly_json(const QPolynomial& P) {
    ordered_json j = ordered_json::array();
    const Field& F = *P.field();
    for (std::size_t i = 0; i < P.coeffs().size(); ++i)
        if (!P[i].is_zero()) j.push_back(ordered_json::array({i, F.to_string(P[i])}));
    return j;
}

ordered_json curve_json(const Curve& C, const WeierstrassData& wd, std::size_t sample) {
    ordered_json j;
    j["q"] = C.q();
    j["n"] = C.n();
    j["r"] = C.r();
    j["s"] = C.s();
    j["model"] = C.describe();
    j["g_s"] = to_string(C.g_s());
    j["g_s_terms"] = qpoly_json(C.g_s());
    j["genus"] = C.genus();
    j["n_points"] = C.points().size() + 1;  // with the point at infinity
    j["affine_points"] = C.points().size();
    j["semigroup"] = semigroup_json(wd.semigroup);
    ordered_json claims = ordered_json::object();
    for (const auto& [label, gens] : wd.claims) claims[label] = gens;
    j["claims"] = claims;
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < std::min(sample, wd.apery.b.size()); ++i)
        basis.push_back(ordered_json::array({wd.apery.pole[i], wd.apery.b[i].to_string()}));
    j["basis_sample"] = basis;
    return j;
}

ordered_json code_json(const BoundReport& b) {
    ordered_json j;
    j["length"] = b.length;
    j["k"] = b.k;
    j["m"] = b.m;
    j["designed_distance"] = b.designed ? ordered_json(*b.designed) : ordered_json(nullptr);
    j["singleton"] = b.singleton;
    j["dstar"] = b.dstar.value;
    if (b.dstar.adjusted) j["dstar_m_used"] = b.dstar.used;
    j["exact_distance"] = b.exact ? ordered_json(*b.exact) : ordered_json(nullptr);
    return j;
}

ordered_json hstar_json(const HStar& hs) {
    ordered_json j;
    j["u"] = hs.u;
    j["elements"] = hs.elems;
    j["lambda_sizes"] = lambda_sizes(hs);
    return j;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["case"] = static_cast<int>(w.kind);
    j["m"] = w.m;
    j["expected"] = w.expected;
    j["weight"] = w.weight ? ordered_json(*w.weight) : ordered_json(nullptr);
    j["pole"] = w.pole;
    if (!w.candidates.empty()) j["candidates"] = w.candidates;
    if (w.dstar) j["dstar"] = *w.dstar;
    j["note"] = w.note;
    return j;
}

ordered_json ledger_json(const RecordLedger& L) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : L.rows)
        rows.push_back({{"length", r.length}, {"k", r.k}, {"d", r.d}, {"source", r.source}, {"shorten_s", r.shorten_s}});
    return {{"count", L.rows.size()}, {"rows", rows}};
}

}  // namespace xnr
