// Copyright 2026 The quandc authors
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

#include <cstdint>
#include <vector>

#include "quand/circuit.hpp"

namespace quand {

// Reversible arithmetic over little-endian registers: bit 0 is the least
// significant. The incrementer and constant adder place bit i on wire i; the
// two-register adder interleaves a_i on wire 2i and b_i on wire 2i+1.

// |a> -> |a+1 mod 2^n>. A QuAND cascade collects the carries, CNOTs apply
// them while reverse QuANDs restore the binary encoding, and a final X flips
// the low bit.
Circuit synth_incrementer(int n);

// |a> -> |a+b mod 2^n> for a known odd constant b. Carry blocks are the
// QuAND (b_k = 0) or its OR-forming X conjugate (b_k = 1); a closing layer of
// X gates adds b itself.
Circuit synth_const_adder(int n, std::uint64_t b);

// |a>|b> -> |a+b mod 2^n>|b> on the interleaved register. Majority blocks
// propagate the carry forward; their inverses undo the scratch work and
// deposit the sum bits.
Circuit synth_adder(int n);

int adder_a_wire(int bit);
int adder_b_wire(int bit);

// Register packing helpers (value -> per-wire digits and back).
std::vector<int> int_to_digits(int n, std::uint64_t value);
std::uint64_t digits_to_int(const std::vector<int>& digits);
std::vector<int> adder_input(int n, std::uint64_t a, std::uint64_t b);
std::uint64_t adder_output_a(const std::vector<int>& digits);
std::uint64_t adder_output_b(const std::vector<int>& digits);

}  // namespace quand
