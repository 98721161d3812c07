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

#ifndef XNR_REPORT_HPP
#define XNR_REPORT_HPP

#include <json.hpp>

#include "xnr/agcode.hpp"
#include "xnr/bounds.hpp"
#include "xnr/curve.hpp"
#include "xnr/numsemi.hpp"
#include "xnr/records.hpp"

namespace xnr {

/// {generators, minimal_generators, genus, frobenius, symmetric, telescopic_order}
nlohmann::ordered_json semigroup_json(const NumericalSemigroup& S);
/// q-polynomial as a list of [i, coefficient] pairs.
nlohmann::ordered_json qpoly_json(const QPolynomial& P);
/// {q, n, r, s, g_s, genus, n_points, affine_points, semigroup, claims, basis_sample}
nlohmann::ordered_json curve_json(const Curve& C, const WeierstrassData& wd, std::size_t sample = 8);
/// {length, k, m, designed_distance, singleton, dstar, exact_distance}
nlohmann::ordered_json code_json(const BoundReport& b);
nlohmann::ordered_json hstar_json(const HStar& hs);
nlohmann::ordered_json witness_json(const Witness& w);
nlohmann::ordered_json ledger_json(const RecordLedger& L);

}  // namespace xnr

#endif
