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

#ifndef XNR_RECORDS_HPP
#define XNR_RECORDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace xnr {

struct RecordTriple {
    std::uint64_t length = 0, k = 0, d = 0;
    std::string source;          // base code id
    std::uint32_t shorten_s = 0;  // 0 for a base code
    bool operator==(const RecordTriple&) const = default;
};

struct RecordLedger {
    std::vector<RecordTriple> rows;
};

/// Which base curves to include: both, or only the s = 2 or s = 3 subcover of X_{5,3} over GF(32).
enum class RecordSet { All, S2, S3 };

/// Builds the base codes, bounds them with d*, and shortens each on its first s coordinates with a rank check.
/// ConsistencyError naming the failing code on any mismatch; `progress` receives one line per base code.
RecordLedger records_enumerate(RecordSet set = RecordSet::All, std::ostream* progress = nullptr);

/// Ledger CSV: header "length,k,d,source,shorten_s".
void write_ledger_csv(std::ostream& os, const RecordLedger& ledger);

}  // namespace xnr

#endif
