// Copyright 2026 The qsqrt Authors
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

#pragma once

#include "qsqrt/analysis.hpp"
#include "qsqrt/arithmetic.hpp"
#include "qsqrt/blocks.hpp"
#include "qsqrt/circuit.hpp"
#include "qsqrt/error.hpp"
#include "qsqrt/export.hpp"
#include "qsqrt/lowering.hpp"
#include "qsqrt/sim.hpp"
#include "qsqrt/sqrt.hpp"
#include "qsqrt/verify.hpp"
