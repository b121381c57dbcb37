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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowmech/core.hpp"
#include "flowmech/mc.hpp"
#include "flowmech/shapley.hpp"

namespace flowmech {

enum class Mechanism { Shapley, MinimalCut, MinimalCutNoStepOne, CoreNearestCut };

inline const char* to_string(Mechanism m) {
  switch (m) {
    case Mechanism::Shapley: return "shapley";
    case Mechanism::MinimalCut: return "mc";
    case Mechanism::MinimalCutNoStepOne: return "mc-no-step-one";
    case Mechanism::CoreNearestCut: return "core-nearest-cut";
  }
  return "?";
}

inline std::optional<Mechanism> parse_mechanism(std::string_view name) {
  for (auto m : {Mechanism::Shapley, Mechanism::MinimalCut, Mechanism::MinimalCutNoStepOne,
                 Mechanism::CoreNearestCut}) {
    if (name == to_string(m)) return m;
  }
  if (name == "core" || name == "core-select") return Mechanism::CoreNearestCut;
  return std::nullopt;
}

/// Mechanisms audited by default. The no-step-one diagnostic is left out.
inline std::vector<Mechanism> default_mechanisms() {
  return {Mechanism::Shapley, Mechanism::MinimalCut, Mechanism::CoreNearestCut};
}

inline Allocation allocate(Mechanism m, const FlowNetwork& net, const Reports& reports) {
  switch (m) {
    case Mechanism::Shapley: return shapley(net, reports);
    case Mechanism::MinimalCut: return mc_allocate(net, reports);
    case Mechanism::MinimalCutNoStepOne: return mc_no_step_one(net, reports);
    case Mechanism::CoreNearestCut: return core_select_nearest_cut(net, reports);
  }
  throw std::logic_error("unknown mechanism");
}

/// One player's payoff. Shapley takes a cheaper single-player path.
inline Rational payoff_of(Mechanism m, const FlowNetwork& net, const Reports& reports,
                          EdgeIndex player) {
  if (m == Mechanism::Shapley) return shapley_value_of(net, reports, player);
  return allocate(m, net, reports).payoffs.at(player);
}

}  // namespace flowmech
