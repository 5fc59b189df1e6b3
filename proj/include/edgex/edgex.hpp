// Copyright 2026 The edgex Authors
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

#ifndef EDGEX_EDGEX_HPP
#define EDGEX_EDGEX_HPP

#include "edgex/coloring.hpp"
#include "edgex/error.hpp"
#include "edgex/extension.hpp"
#include "edgex/families.hpp"
#include "edgex/graph.hpp"
#include "edgex/io.hpp"
#include "edgex/oracle.hpp"

#endif  // EDGEX_EDGEX_HPP
