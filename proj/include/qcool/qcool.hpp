// Copyright 2026 The qcool Authors
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

#include "qcool/bits.hpp"
#include "qcool/errors.hpp"
#include "qcool/io.hpp"
#include "qcool/methods.hpp"
#include "qcool/permcore.hpp"
#include "qcool/prob_vector.hpp"
#include "qcool/protocols.hpp"
#include "qcool/qasm.hpp"
#include "qcool/sim.hpp"
#include "qcool/sweep.hpp"
#include "qcool/synth.hpp"
#include "qcool/thermo.hpp"
