// Copyright 2026 The chordset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHORDSET_JSON_IO_HPP_
#define CHORDSET_JSON_IO_HPP_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chordset/chord_scan.hpp"
#include "chordset/hopf.hpp"
#include "chordset/integer_hopf.hpp"
#include "chordset/interval_union.hpp"
#include "chordset/rational.hpp"
#include "chordset/synthesis.hpp"

namespace chordset {

using Json = nlohmann::ordered_json;

// Exact values are strings "p/q" or "p"; JSON numbers are rejected.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// [["1/3","1/2"],["2/3","1"]]
Json to_json(const OpenIntervalUnion& u);
OpenIntervalUnion union_from_json(const Json& j);

// Text form "1/3,1/2;2/3,1"; the empty string is the empty union.
OpenIntervalUnion parse_union_text(std::string_view text);
std::string union_to_text(const OpenIntervalUnion& u);

// {"v": [...], "tail": true}; the set (0, inf) also carries "includes_one": true.
Json to_json(const HopfSet& h);
HopfSet hopf_from_json(const Json& j);

// {"closed_pieces": [["0","1/3"],...], "isolated_points": ["1/2"]}
Json to_json(const ChordComplementReport& r);
ChordComplementReport complement_report_from_json(const Json& j);

// {"intervals": [[4,5],[6,10]], "tail": 10}
Json to_json(const IntegerHopfSet& s);
IntegerHopfSet integer_set_from_json(const Json& j);
// Text form "4,5;6,10;10" with the tail start last.
IntegerHopfSet parse_integer_set_text(std::string_view text);

Json to_json(const VerifyResult& r);
// {"intervals": [[4,5],[6,10]], "tail": 10, "n": 3, "picksinwn": true, "origin": "construction"}
Json census_line(const CensusEntry& e);

Json to_json(const ScanParams& p);
Json to_json(const ChordScanReport& r);
// Columns ell,presence,multiplicity; continua print as "continuum".
std::string plot_csv(const ChordScanReport& r);

Json to_json(const ChordVector& v);
Json to_json(const AgreementReport& r);
Json to_json(const InvarianceReport& r);
Json to_json(const SynthesisResult& r, bool include_report = true);

}  // namespace chordset

#endif  // CHORDSET_JSON_IO_HPP_
