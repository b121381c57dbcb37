// Copyright 2026 The flowmech Authors
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

#pragma once

#include "flowmech/audits.hpp"
#include "flowmech/complementarity.hpp"
#include "flowmech/core.hpp"
#include "flowmech/cuts.hpp"
#include "flowmech/exact_lp.hpp"
#include "flowmech/fixtures.hpp"
#include "flowmech/limits.hpp"
#include "flowmech/maxflow.hpp"
#include "flowmech/mc.hpp"
#include "flowmech/mechanism.hpp"
#include "flowmech/network.hpp"
#include "flowmech/network_io.hpp"
#include "flowmech/random_network.hpp"
#include "flowmech/rational.hpp"
#include "flowmech/shapley.hpp"
#include "flowmech/validate.hpp"
