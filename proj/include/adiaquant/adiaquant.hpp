// Copyright 2026 The adiaquant Authors
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

/// @file Convenience header pulling in the whole library.

#pragma once

#include "adiaquant/common.hpp"
#include "adiaquant/eigensolver.hpp"
#include "adiaquant/evolution.hpp"
#include "adiaquant/hamiltonian.hpp"
#include "adiaquant/instance.hpp"
#include "adiaquant/reduction.hpp"
#include "adiaquant/ring.hpp"
#include "adiaquant/sector.hpp"
#include "adiaquant/spectrum.hpp"
#include "adiaquant/trotter.hpp"
