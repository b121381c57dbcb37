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

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flowmech/network_io.hpp"

namespace flowmech {

/// Bundled example graphs. Each text is identical to fixtures/<name>.net.
struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view text;
};

inline constexpr std::array<Fixture, 10> kFixtures{{
    {"fig1", "diamond with a surplus source edge; reports (2,1,1,1)",
     R"net(node s
node A
node t
source s
sink t
edge e1 s A 2
edge e2 s A 1
edge e3 A t 1
edge e4 A t 1
)net"},
    {"fig2a", "fan of five sink edges behind one source edge",
     R"net(node s
node A
node t
source s
sink t
edge e1 A t 2
edge e2 A t 1
edge e3 A t 1
edge e4 A t 1
edge e5 A t 1
edge e6 s A 1
)net"},
    {"fig2b", "fig2a with the cap-2 edge split into two unit edges",
     R"net(node s
node A
node t
source s
sink t
edge e1.1 A t 1
edge e1.2 A t 1
edge e2 A t 1
edge e3 A t 1
edge e4 A t 1
edge e5 A t 1
edge e6 s A 1
)net"},
    {"fig3a", "two parallel sink edges behind one source edge",
     R"net(node s
node A
node t
source s
sink t
edge e1 A t 1
edge e2 A t 1
edge e3 s A 1
)net"},
    {"fig3b", "fig3a with the parallel pair merged",
     R"net(node s
node A
node t
source s
sink t
edge e1+e2 A t 2
edge e3 s A 1
)net"},
    {"fig4", "diamond with half-capacity source edges",
     R"net(node s
node A
node t
source s
sink t
edge e1 s A 1/2
edge e2 s A 1/2
edge e3 A t 1
edge e4 A t 1
)net"},
    {"fig5", "two-edge path beside a direct s-t edge",
     R"net(node s
node A
node t
source s
sink t
edge e1 s A 1
edge e2 A t 2
edge e3 s t 1
)net"},
    {"fig9", "unit diamond",
     R"net(node s
node A
node t
source s
sink t
edge e1 s A 1
edge e2 s A 1
edge e3 A t 1
edge e4 A t 1
)net"},
    {"neither", "two disjoint two-edge paths",
     R"net(node s
node A
node B
node t
source s
sink t
edge e1 s A 1
edge e2 A t 1
edge e3 s B 1
edge e4 B t 1
)net"},
    {"series", "chain s-A-B-t with bypass edges into B and t",
     R"net(node s
node A
node B
node t
source s
sink t
edge e1 s A 1
edge e2 A B 1
edge e3 B t 2
edge e4 s B 1
edge e5 s t 1
)net"},
}};

inline const Fixture& find_fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

inline FlowNetwork load_fixture(std::string_view name) {
  return parse_network(find_fixture(name).text);
}

}  // namespace flowmech
