// Copyright 2026 The latgame Authors
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

#ifndef LATGAME_LATGAME_HPP
#define LATGAME_LATGAME_HPP

#include "latgame/coresep.hpp"
#include "latgame/embedded.hpp"
#include "latgame/errors.hpp"
#include "latgame/games.hpp"
#include "latgame/lattice.hpp"
#include "latgame/partition.hpp"
#include "latgame/rational.hpp"
#include "latgame/simplex.hpp"
#include "latgame/solutions.hpp"
#include "latgame/transform.hpp"

#endif  // LATGAME_LATGAME_HPP
