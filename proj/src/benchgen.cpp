// Copyright 2026 The mcmap Authors
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

#include "mcmap/benchgen.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mcmap/rng.hpp"

namespace mcmap {

namespace {

constexpr std::array<std::string_view, 6> kFamilyNames = {
    "ghz", "cuccaro", "qft", "quantum_volume", "grover", "random"};

Gate g1(std::string label, std::size_t q, std::vector<double> params = {}) {
  return Gate(std::move(label), {static_cast<Qubit>(q)}, std::move(params));
}

Gate g2(std::string label, std::size_t a, std::size_t b,
        std::vector<double> params = {}) {
  return Gate(std::move(label), {static_cast<Qubit>(a), static_cast<Qubit>(b)},
              std::move(params));
}

// qelib1 ccx expansion.
void append_toffoli(Circuit &c, std::size_t c1, std::size_t c2,
                    std::size_t target) {
  c.add(g1("h", target));
  c.add(g2("cx", c2, target));
  c.add(g1("tdg", target));
  c.add(g2("cx", c1, target));
  c.add(g1("t", target));
  c.add(g2("cx", c2, target));
  c.add(g1("tdg", target));
  c.add(g2("cx", c1, target));
  c.add(g1("t", c2));
  c.add(g1("t", target));
  c.add(g1("h", target));
  c.add(g2("cx", c1, c2));
  c.add(g1("t", c1));
  c.add(g1("tdg", c2));
  c.add(g2("cx", c1, c2));
}

void append_maj(Circuit &c, std::size_t x, std::size_t y, std::size_t z) {
  c.add(g2("cx", z, y));
  c.add(g2("cx", z, x));
  append_toffoli(c, x, y, z);
}

void append_uma(Circuit &c, std::size_t x, std::size_t y, std::size_t z) {
  append_toffoli(c, x, y, z);
  c.add(g2("cx", z, x));
  c.add(g2("cx", x, y));
}

// Ascending cx ladder, z on the last qubit, descending ladder.
void append_ladder_mcz(Circuit &c, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) c.add(g2("cx", i, i + 1));
  c.add(g1("z", n - 1));
  for (std::size_t i = n - 1; i > 0; --i) c.add(g2("cx", i - 1, i));
}

void append_random_u3(Circuit &c, std::size_t q, Xoshiro256 &rng) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double theta = rng.unit() * kTwoPi;
  const double phi = rng.unit() * kTwoPi;
  const double lambda = rng.unit() * kTwoPi;
  c.add(g1("u3", q, {theta, phi, lambda}));
}

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::string_view family_name(Family family) {
  return kFamilyNames.at(static_cast<std::size_t>(family));
}

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  if (name == "qv") return Family::QuantumVolume;
  return std::nullopt;
}

bool is_stochastic(Family family) {
  return family == Family::QuantumVolume || family == Family::Random;
}

std::string BenchmarkSpec::label() const {
  std::ostringstream out;
  out << family_name(family);
  switch (family) {
    case Family::QuantumVolume:
      out << "(depth=" << depth << ")";
      break;
    case Family::Grover:
      out << "(iterations=" << iterations << ")";
      break;
    case Family::Random:
      out << "(p=" << density << ";cycles=" << depth << ")";
      break;
    default:
      break;
  }
  return out.str();
}

Circuit generate(const BenchmarkSpec &spec) {
  switch (spec.family) {
    case Family::Ghz:
      return gen_ghz(spec.num_qubits);
    case Family::Cuccaro:
      require(spec.num_qubits >= 4 && spec.num_qubits % 2 == 0,
              "cuccaro needs an even qubit count >= 4 (2 * bits + 2)");
      return gen_cuccaro((spec.num_qubits - 2) / 2);
    case Family::Qft:
      return gen_qft(spec.num_qubits);
    case Family::QuantumVolume:
      return gen_quantum_volume(spec.num_qubits, spec.depth, spec.seed);
    case Family::Grover:
      return gen_grover(spec.num_qubits, spec.iterations);
    case Family::Random:
      return gen_random(spec.num_qubits, spec.depth, spec.density, spec.seed);
  }
  throw std::invalid_argument("unknown benchmark family");
}

Circuit gen_ghz(std::size_t n) {
  require(n >= 2, "ghz needs at least 2 qubits");
  Circuit c(n);
  c.add(g1("h", 0));
  for (std::size_t i = 1; i < n; ++i) c.add(g2("cx", 0, i));
  return c;
}

Circuit gen_qft(std::size_t n) {
  require(n >= 1, "qft needs at least 1 qubit");
  Circuit c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.add(g1("h", i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double angle = std::numbers::pi / std::ldexp(1.0, int(j - i));
      c.add(g2("cp", i, j, {angle}));
    }
  }
  for (std::size_t i = 0; i < n / 2; ++i) c.add(g2("swap", i, n - 1 - i));
  return c;
}

Circuit gen_cuccaro(std::size_t bits) {
  require(bits >= 1, "cuccaro needs at least 1 bit");
  const std::size_t n = 2 * bits + 2;
  auto a = [](std::size_t i) { return 2 * i; };
  auto b = [](std::size_t i) { return 2 * i + 1; };
  const std::size_t cin = 2 * bits;
  const std::size_t cout = 2 * bits + 1;

  Circuit c(n);
  append_maj(c, cin, b(0), a(0));
  for (std::size_t i = 1; i < bits; ++i) append_maj(c, a(i - 1), b(i), a(i));
  c.add(g2("cx", a(bits - 1), cout));
  for (std::size_t i = bits - 1; i > 0; --i) {
    append_uma(c, a(i - 1), b(i), a(i));
  }
  append_uma(c, cin, b(0), a(0));
  return c;
}

Circuit gen_quantum_volume(std::size_t n, std::size_t depth,
                           std::uint64_t seed) {
  require(n >= 2, "quantum volume needs at least 2 qubits");
  require(depth >= 1, "quantum volume needs depth >= 1");
  auto rng = Xoshiro256::keyed(
      static_cast<std::uint64_t>(Family::QuantumVolume), n, seed);
  Circuit c(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t layer = 0; layer < depth; ++layer) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const std::size_t qa = perm[2 * k];
      const std::size_t qb = perm[2 * k + 1];
      append_random_u3(c, qa, rng);
      append_random_u3(c, qb, rng);
      c.add(g2("cx", qa, qb));
      append_random_u3(c, qa, rng);
      append_random_u3(c, qb, rng);
      c.add(g2("cx", qb, qa));
      append_random_u3(c, qa, rng);
      append_random_u3(c, qb, rng);
      c.add(g2("cx", qa, qb));
      append_random_u3(c, qa, rng);
      append_random_u3(c, qb, rng);
    }
  }
  return c;
}

Circuit gen_grover(std::size_t n, std::size_t iterations) {
  require(n >= 2, "grover needs at least 2 qubits");
  require(iterations >= 1, "grover needs at least 1 iteration");
  Circuit c(n);
  for (std::size_t q = 0; q < n; ++q) c.add(g1("h", q));
  for (std::size_t it = 0; it < iterations; ++it) {
    // oracle marking |1...1>
    append_ladder_mcz(c, n);
    // diffusion
    for (std::size_t q = 0; q < n; ++q) c.add(g1("h", q));
    for (std::size_t q = 0; q < n; ++q) c.add(g1("x", q));
    append_ladder_mcz(c, n);
    for (std::size_t q = 0; q < n; ++q) c.add(g1("x", q));
    for (std::size_t q = 0; q < n; ++q) c.add(g1("h", q));
  }
  return c;
}

Circuit gen_random(std::size_t n, std::size_t cycles, double p,
                   std::uint64_t seed) {
  require(n >= 2, "random circuit needs at least 2 qubits");
  require(cycles >= 1, "random circuit needs at least 1 cycle");
  require(p >= 0.0 && p <= 1.0, "two-qubit density must lie in [0, 1]");
  static const std::array<std::string, 8> kOneQubit = {
      "h", "x", "y", "z", "s", "sdg", "t", "tdg"};

  // The epsilon keeps products like 0.3 * 120 / 2 from flooring to 17.
  const auto pairs = std::min<std::size_t>(
      n / 2, static_cast<std::size_t>(
                 std::floor(p * static_cast<double>(n) / 2.0 + 1e-9)));
  auto rng = Xoshiro256::keyed(static_cast<std::uint64_t>(Family::Random), n,
                               seed);
  Circuit c(n);
  std::vector<std::size_t> perm(n);
  for (std::size_t cycle = 0; cycle < cycles; ++cycle) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    rng.shuffle(perm);
    for (std::size_t k = 0; k < pairs; ++k) {
      c.add(g2("cx", perm[2 * k], perm[2 * k + 1]));
    }
    for (std::size_t i = 2 * pairs; i < n; ++i) {
      c.add(g1(kOneQubit[rng.below(kOneQubit.size())], perm[i]));
    }
  }
  return c;
}

}  // namespace mcmap
