// Copyright 2026 The hoaxnet Authors
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

#include <string_view>

namespace hoaxnet {

/// Instruction-set variants of the data-parallel kernels.
enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when this build carries the AVX2 kernels and the CPU supports them.
bool avx2_available() noexcept;

/// Best ISA for this machine, unless HOAXNET_ISA=scalar forces the reference
/// kernels. Decided once per process.
Isa selected_isa() noexcept;

}  // namespace hoaxnet
