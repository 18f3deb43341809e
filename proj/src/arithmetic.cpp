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

#include "quand/arithmetic.hpp"

#include <numbers>
#include <stdexcept>

#include "quand/synthesis.hpp"

namespace quand {

namespace {

constexpr double kPi = std::numbers::pi;

bool bit(std::uint64_t value, int i) { return (value >> i) & 1u; }

// Carry block for a constant-adder bit. With b_k = 0 the next carry is
// child AND parent (a plain QuAND). With b_k = 1 it is child OR parent: the
// drawn block X-conjugates the QuAND on both wires, and the child-side X
// pair cancels against the QuAND's own X, leaving the bare swap between the
// parent-side X pair.
void g_block(Circuit& c, int child, int parent, bool b_k) {
  if (!b_k) {
    c.extend(quand_ops(child, parent, 0.0));
    return;
  }
  c.x(parent);
  c.push(GateKind::Swap1120, {child, parent}, 0.0);
  c.x(parent);
}

void g_block_reverse(Circuit& c, int child, int parent, bool b_k) {
  if (!b_k) {
    c.extend(reverse_quand_ops(child, parent, 0.0));
    return;
  }
  c.x(parent);
  c.push(GateKind::Swap1120, {child, parent}, kPi);
  c.x(parent);
}

// Majority block of the two-register adder: on entry `top` carries c_k, and
// on exit `bot` carries c_{k+1} = maj(a_k, b_k, c_k) while (top, mid) hold
// the embedded scratch pair.
void m_block(Circuit& c, int top, int mid, int bot) {
  c.cnot(mid, top);
  c.cnot(bot, mid);
  c.cnot(mid, top);
  c.extend(quand_ops(top, mid, 0.0));
  c.cnot(mid, bot);
}

// Inverse of m_block that also finishes the sum: restores bot to b_k,
// unwinds the QuAND, and leaves mid = a_k XOR b_k XOR c_k.
void u_block(Circuit& c, int top, int mid, int bot) {
  c.cnot(mid, bot);
  c.extend(reverse_quand_ops(top, mid, 0.0));
  c.cnot(top, mid);
  c.cnot(mid, top);
  c.cnot(bot, mid);
  c.cnot(mid, top);
}

}  // namespace

Circuit synth_incrementer(int n) {
  if (n < 1) throw std::invalid_argument("incrementer: need n >= 1");
  std::vector<int> dims(n, 2);
  for (int k = 0; k <= n - 3; ++k) dims[k] = 3;
  Circuit c = Circuit::make(dims);
  if (n == 1) return c.x(0), c;
  for (int k = 0; k <= n - 3; ++k) c.extend(quand_ops(k, k + 1, 0.0));
  c.cnot(n - 2, n - 1);
  for (int k = n - 3; k >= 0; --k) {
    c.extend(reverse_quand_ops(k, k + 1, 0.0));
    c.cnot(k, k + 1);
  }
  c.x(0);
  return c;
}

Circuit synth_const_adder(int n, std::uint64_t b) {
  if (n < 1) throw std::invalid_argument("const adder: need n >= 1");
  if (b < 1 || b >= (std::uint64_t{1} << n))
    throw std::invalid_argument("const adder: constant outside [1, 2^n)");
  if ((b & 1u) == 0)
    throw std::invalid_argument("const adder: b must be odd (b0 = 1)");
  std::vector<int> dims(n, 2);
  for (int k = 0; k <= n - 3; ++k) dims[k] = 3;
  Circuit c = Circuit::make(dims);
  for (int k = 1; k <= n - 2; ++k) g_block(c, k - 1, k, bit(b, k));
  if (n >= 2) c.cnot(n - 2, n - 1);
  for (int k = n - 2; k >= 1; --k) {
    g_block_reverse(c, k - 1, k, bit(b, k));
    c.cnot(k - 1, k);
  }
  for (int k = 0; k < n; ++k)
    if (bit(b, k)) c.x(k);
  return c;
}

int adder_a_wire(int bit_index) { return 2 * bit_index; }
int adder_b_wire(int bit_index) { return 2 * bit_index + 1; }

Circuit synth_adder(int n) {
  if (n < 1) throw std::invalid_argument("adder: need n >= 1");
  std::vector<int> dims(2 * n, 2);
  if (n >= 2) {
    dims[adder_a_wire(0)] = 3;
    for (int k = 0; k <= n - 3; ++k) dims[adder_b_wire(k)] = 3;
  }
  Circuit c = Circuit::make(dims);
  if (n == 1) return c.cnot(adder_b_wire(0), adder_a_wire(0)), c;
  c.extend(quand_ops(adder_a_wire(0), adder_b_wire(0), 0.0));
  for (int k = 0; k <= n - 3; ++k)
    m_block(c, adder_b_wire(k), adder_a_wire(k + 1), adder_b_wire(k + 1));
  c.cnot(adder_b_wire(n - 2), adder_a_wire(n - 1));
  c.cnot(adder_b_wire(n - 1), adder_a_wire(n - 1));
  for (int k = n - 3; k >= 0; --k)
    u_block(c, adder_b_wire(k), adder_a_wire(k + 1), adder_b_wire(k + 1));
  c.extend(reverse_quand_ops(adder_a_wire(0), adder_b_wire(0), 0.0));
  c.cnot(adder_b_wire(0), adder_a_wire(0));
  return c;
}

std::vector<int> int_to_digits(int n, std::uint64_t value) {
  std::vector<int> digits(n, 0);
  for (int i = 0; i < n; ++i) digits[i] = bit(value, i) ? 1 : 0;
  return digits;
}

std::uint64_t digits_to_int(const std::vector<int>& digits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i]) value |= std::uint64_t{1} << i;
  return value;
}

std::vector<int> adder_input(int n, std::uint64_t a, std::uint64_t b) {
  std::vector<int> digits(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    digits[adder_a_wire(i)] = bit(a, i) ? 1 : 0;
    digits[adder_b_wire(i)] = bit(b, i) ? 1 : 0;
  }
  return digits;
}

std::uint64_t adder_output_a(const std::vector<int>& digits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; 2 * i < digits.size(); ++i)
    if (digits[adder_a_wire(static_cast<int>(i))])
      value |= std::uint64_t{1} << i;
  return value;
}

std::uint64_t adder_output_b(const std::vector<int>& digits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; 2 * i + 1 < digits.size(); ++i)
    if (digits[adder_b_wire(static_cast<int>(i))])
      value |= std::uint64_t{1} << i;
  return value;
}

}  // namespace quand
