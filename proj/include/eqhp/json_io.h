/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// JSON encodings of the library's result types. Objects use sorted keys so
// identical values serialize to identical bytes.
#ifndef EQHP_JSON_IO_H_
#define EQHP_JSON_IO_H_

#include <json.hpp>

#include "eqhp/additive.h"
#include "eqhp/cellgen.h"
#include "eqhp/mackey.h"
#include "eqhp/rep_cn.h"
#include "eqhp/ring_c2.h"

namespace eqhp {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json ToJson(const C2Degree& degree);
Json ToJson(const AbelianGroup& group);
Json ToJson(const GroupHom& hom);
Json ToJson(const FixedDimProfile& profile);
Json ToJson(const SplitFullFlag& flag);
Json ToJson(const CellDescriptor& cell);
Json ToJson(const EvenVerdict& verdict);
Json ToJson(const CellComplexPlan& plan);
Json ToJson(const AdditiveStructure& structure);
Json ToJson(const MackeyPresentation& presentation);
Json ToJson(const PointCohomClass& point);
Json ToJson(const EvaluatedGroup& group);
Json ToJson(const FixedComponentReport& report);
Json ToJson(const RingElement& element);
Json ToJson(const Images& images);
Json ToJson(const RelationCheck& check);
Json ToJson(const NuRecord& record);
Json ToJson(const InjectivityProbe& probe);

// Irreducible tables of C_n over C and H.
Json RepTablesJson(int n);

}  // namespace eqhp

#endif  // EQHP_JSON_IO_H_
