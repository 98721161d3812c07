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

#include "xnr/records.hpp"

#include <set>
#include <tuple>

#include "xnr/agcode.hpp"
#include "xnr/error.hpp"

namespace xnr {

namespace {

struct BaseCode {
    std::uint64_t m, k, d;
    std::uint32_t max_shorten;
};

struct BaseCurve {
    const char* name;
    const char* g_s;
    std::vector<BaseCode> codes;
};

// Published parameters. Each base code is recomputed and compared against these.
const std::vector<BaseCurve>& base_curves() {
    static const std::vector<BaseCurve> v{
        {"X^2_{5,3}", "y^4 + a^18*y^2 + a*y", {{105, 94, 24, 7}, {109, 98, 20, 7}}},
        {"X^3_{5,3}",
         "y^8 + a^12*y^4 + a^20*y^2 + a*y",
         {{201, 174, 56, 24}, {209, 182, 48, 24}, {217, 190, 40, 24}, {219, 192, 38, 16}}},
    };
    return v;
}

std::string id(const BaseCurve& c, std::uint64_t m) { return "C" + std::to_string(m) + "(" + c.name + ")"; }

}  // namespace

RecordLedger records_enumerate(RecordSet set, std::ostream* progress) {
    const FieldPtr F = Field::create(2, 5);
    RecordLedger L;
    for (std::size_t ci = 0; ci < base_curves().size(); ++ci) {
        if ((set == RecordSet::S2 && ci != 0) || (set == RecordSet::S3 && ci != 1)) continue;
        const BaseCurve& bc = base_curves()[ci];
        const CurvePtr C = Curve::create(5, 3, parse_qpoly(F, 2, bc.g_s));
        const WeierstrassData wd = weierstrass_semigroup(C, 0);
        const HStar hs = hstar(wd.semigroup, C->points().size());
        for (const BaseCode& b : bc.codes) {
            const std::string name = id(bc, b.m);
            const OnePointCode code = code_new(C, b.m, BasisRoute::Auto, &wd);
            const std::uint64_t d = dstar(hs, b.m).value;
            if (code.dimension() != b.k || d != b.d)
                throw ConsistencyError(name + ": computed [" + std::to_string(code.length()) + "," +
                                       std::to_string(code.dimension()) + "," + std::to_string(d) + "], expected k=" +
                                       std::to_string(b.k) + " d=" + std::to_string(b.d));
            L.rows.push_back({code.length(), b.k, d, name, 0});
            for (std::uint32_t s = 1; s <= b.max_shorten; ++s) {
                const LinearCode sh = code_shorten(code.code, s);
                if (sh.dimension() != b.k - s)
                    throw ConsistencyError(name + " shortened by " + std::to_string(s) + " has dimension " +
                                           std::to_string(sh.dimension()) + ", expected " + std::to_string(b.k - s));
                L.rows.push_back({sh.length(), sh.dimension(), d, name, s});
            }
            if (progress) *progress << name << ": [" << code.length() << "," << b.k << "," << d << "] + "
                                    << b.max_shorten << " shortenings\n";
        }
    }
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
    for (const auto& r : L.rows)
        if (!seen.insert({r.length, r.k, r.d}).second)
            throw ConsistencyError("duplicate triple [" + std::to_string(r.length) + "," + std::to_string(r.k) + "," +
                                   std::to_string(r.d) + "] from " + r.source);
    return L;
}

void write_ledger_csv(std::ostream& os, const RecordLedger& ledger) {
    os << "length,k,d,source,shorten_s\n";
    for (const auto& r : ledger.rows)
        os << r.length << ',' << r.k << ',' << r.d << ',' << r.source << ',' << r.shorten_s << '\n';
}

}  // namespace xnr
