// Copyright 2026 The natplan Authors.
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

// Umbrella header.

#ifndef NATPLAN_NATPLAN_HPP_
#define NATPLAN_NATPLAN_HPP_

#include "natplan/constraints.hpp"
#include "natplan/domain.hpp"
#include "natplan/emit.hpp"
#include "natplan/error.hpp"
#include "natplan/extract.hpp"
#include "natplan/generator.hpp"
#include "natplan/harness/evaluate.hpp"
#include "natplan/harness/hardcode.hpp"
#include "natplan/harness/record.hpp"
#include "natplan/harness/report.hpp"
#include "natplan/harness/runner.hpp"
#include "natplan/parser.hpp"
#include "natplan/serialize.hpp"
#include "natplan/solver.hpp"
#include "natplan/time.hpp"

#endif  // NATPLAN_NATPLAN_HPP_
