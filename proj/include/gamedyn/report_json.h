// Copyright 2026 The gamedyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEDYN_REPORT_JSON_H_
#define GAMEDYN_REPORT_JSON_H_

#include "gamedyn/classify.h"
#include "gamedyn/convergence.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/feedback_block.h"
#include "json.hpp"

namespace gamedyn {

nlohmann::json VectorToJson(const Eigen::VectorXd& v);
nlohmann::json ToJson(const ClassificationReport& report);
nlohmann::json ToJson(const RestPointResult& result);
nlohmann::json ToJson(const BifurcationResult& result);
nlohmann::json ToJson(const ConvergenceReport& report);
nlohmann::json ToJson(const FeedbackBlockReport& report);

}  // namespace gamedyn

#endif  // GAMEDYN_REPORT_JSON_H_
