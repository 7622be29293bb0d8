// Copyright 2026 The pmtnsched Authors.
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

#include <cstdint>

#include "pmtn/instance.hpp"

namespace pmtn {

// Random instance: releases i.i.d. uniform on [1, p(n-6)], weights i.i.d.
// uniform on [1, 30]. Draws are repeated until the instance needs no idle
// time. Requires n >= 7 and p >= 1 (std::invalid_argument otherwise).
Instance generate_instance(int n, int p, std::uint64_t seed);

// The i-th instance of the family (n, p, seed); what `pmtnsched generate`
// writes to inst_{n}_{p}_{seed}_{i}.txt.
Instance generate_family_member(int n, int p, std::uint64_t seed, int index);

}  // namespace pmtn
