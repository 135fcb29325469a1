// Copyright 2026 The hvc Authors
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

// Umbrella header.
#include "hvc/chsh.hpp"
#include "hvc/conditions.hpp"
#include "hvc/distribution.hpp"
#include "hvc/error.hpp"
#include "hvc/evaluate.hpp"
#include "hvc/info.hpp"
#include "hvc/joint.hpp"
#include "hvc/json_io.hpp"
#include "hvc/ledger.hpp"
#include "hvc/model.hpp"
#include "hvc/report.hpp"
#include "hvc/rng.hpp"
#include "hvc/search.hpp"
#include "hvc/toner_bacon.hpp"
#include "hvc/zoo.hpp"
