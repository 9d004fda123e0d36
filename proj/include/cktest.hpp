// Copyright 2026 The cktest Authors
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

#pragma once

#include "cktest/exact.hpp"
#include "cktest/explored.hpp"
#include "cktest/generators.hpp"
#include "cktest/graph.hpp"
#include "cktest/harness.hpp"
#include "cktest/oracle.hpp"
#include "cktest/params.hpp"
#include "cktest/pattern.hpp"
#include "cktest/rng.hpp"
#include "cktest/subdivided_oracle.hpp"
#include "cktest/testers.hpp"
#include "cktest/verdict.hpp"
#include "cktest/witness.hpp"
