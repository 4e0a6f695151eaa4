// Copyright 2026 The ggpne Authors.
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

#ifndef GGPNE_GGPNE_HPP_
#define GGPNE_GGPNE_HPP_

#include "ggpne/equilibria.hpp"
#include "ggpne/game.hpp"
#include "ggpne/generate.hpp"
#include "ggpne/heuristics.hpp"
#include "ggpne/io.hpp"
#include "ggpne/junction.hpp"
#include "ggpne/mrf.hpp"
#include "ggpne/random.hpp"
#include "ggpne/semiring.hpp"
#include "ggpne/structure.hpp"
#include "ggpne/table.hpp"

#endif  // GGPNE_GGPNE_HPP_
