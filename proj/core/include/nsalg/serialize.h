// Copyright 2026 The nsalg Authors
//
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

// JSON forms of the library's result types. Complex matrices are stored as
// {"rows", "cols", "re", "im"} with row-major nested arrays; doubles are
// written in shortest round-trip form, so parse(emit(x)) is exact.
//
// The schema is documented in docs/json_schema.md.

#ifndef NSALG_SERIALIZE_H_
#define NSALG_SERIALIZE_H_

#include <nlohmann/json.hpp>

#include "nsalg/codes.h"
#include "nsalg/collective.h"
#include "nsalg/dynamics.h"
#include "nsalg/symmetry.h"
#include "nsalg/wedderburn.h"

namespace nsalg {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Eigen types live outside this namespace, so they get named helpers
// instead of ADL hooks.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);
Json vector_to_json(const Eigen::VectorXcd& v);
Eigen::VectorXcd vector_from_json(const Json& j);

void to_json(Json& j, const Sector& s);
void from_json(const Json& j, Sector& s);
void to_json(Json& j, const BlockStructure& bs);
void from_json(const Json& j, BlockStructure& bs);
void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);
void to_json(Json& j, const CodeSubspace& c);
void from_json(const Json& j, CodeSubspace& c);
void to_json(Json& j, const KLReport& r);
void from_json(const Json& j, KLReport& r);
void to_json(Json& j, const ErrorPairClassification& c);
void to_json(Json& j, const SuppressionReport& r);
void from_json(const Json& j, SuppressionReport& r);
void to_json(Json& j, const UniversalityReport& r);
void from_json(const Json& j, UniversalityReport& r);
void to_json(Json& j, const FidelityTrace& t);
void from_json(const Json& j, FidelityTrace& t);
void to_json(Json& j, const ClusterReport& r);
void from_json(const Json& j, ClusterReport& r);

// Short table "label tag n d" for the text reports.
std::string sector_table(const BlockStructure& bs);

}  // namespace nsalg

#endif  // NSALG_SERIALIZE_H_
