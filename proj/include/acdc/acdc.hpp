// Copyright 2026 The ACDC Provenance Authors.
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

#ifndef ACDC_ACDC_HPP
#define ACDC_ACDC_HPP

#include "acdc/error.hpp"
#include "acdc/evaluator.hpp"
#include "acdc/graph.hpp"
#include "acdc/naive_evaluator.hpp"
#include "acdc/policy.hpp"
#include "acdc/policy_parser.hpp"
#include "acdc/prov_ops.hpp"
#include "acdc/scenario_report.hpp"
#include "acdc/scenarios.hpp"
#include "acdc/store.hpp"

#endif  // ACDC_ACDC_HPP
