// Copyright 2026 The Symharm Authors. All Rights Reserved.
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

#ifndef SYMHARM_SYMHARM_HPP
#define SYMHARM_SYMHARM_HPP

#include "symharm/chord.hpp"
#include "symharm/measures.hpp"
#include "symharm/ranking.hpp"
#include "symharm/rational.hpp"
#include "symharm/report.hpp"
#include "symharm/scale.hpp"

#endif  // SYMHARM_SYMHARM_HPP
