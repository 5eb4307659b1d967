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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "mcmap/benchgen.hpp"
#include "mcmap/rng.hpp"

namespace mcmap {
namespace {

std::vector<std::string> labels(const Circuit &c) {
  std::vector<std::string> out;
  for (const auto &g : c.gates()) out.push_back(g.label());
  return out;
}

TEST(Rng, SplitmixReferenceValues) {
  // First outputs of splitmix64 seeded with 0, from the reference C code.
  std::uint64_t state = 0;
  EXPECT_EQ(splitmix64(state), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(state), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(splitmix64(state), 0x06c45d188009454fULL);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Xoshiro256 rng(42);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, KeyedStreamsDiffer) {
  auto a = Xoshiro256::keyed(1, 10, 5);
  auto b = Xoshiro256::keyed(1, 11, 5);
  auto c = Xoshiro256::keyed(1, 10, 5);
  const auto a0 = a.next();
  EXPECT_NE(a0, b.next());
  EXPECT_EQ(a0, c.next());
}

TEST(Ghz, Construction) {
  EXPECT_EQ(gen_ghz(3), Circuit(3, {Gate("h", {0}), Gate("cx", {0, 1}),
                                    Gate("cx", {0, 2})}));
  EXPECT_EQ(gen_ghz(2), Circuit(2, {Gate("h", {0}), Gate("cx", {0, 1})}));
  EXPECT_EQ(timeslice(gen_ghz(8)).num_slices(), 8u);
  EXPECT_THROW(gen_ghz(1), std::invalid_argument);
}

TEST(Qft, Construction) {
  EXPECT_EQ(gen_qft(1), Circuit(1, {Gate("h", {0})}));
  const Circuit c = gen_qft(3);
  EXPECT_EQ(labels(c), (std::vector<std::string>{"h", "cp", "cp", "h", "cp",
                                                 "h", "swap"}));
  EXPECT_EQ(c.gates()[1].qubits(), (std::vector<Qubit>{0, 1}));
  EXPECT_EQ(c.gates()[2].qubits(), (std::vector<Qubit>{0, 2}));
  EXPECT_EQ(c.gates()[4].qubits(), (std::vector<Qubit>{1, 2}));
  EXPECT_EQ(c.gates()[6].qubits(), (std::vector<Qubit>{0, 2}));
  EXPECT_DOUBLE_EQ(c.gates()[1].params()[0], std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(c.gates()[2].params()[0], std::numbers::pi / 4);
  EXPECT_EQ(c.count_two_qubit_gates(), 4u);
  EXPECT_EQ(gen_qft(10).count_two_qubit_gates(), 50u);
}

TEST(Cuccaro, Sizes) {
  EXPECT_EQ(gen_cuccaro(4).num_qubits(), 10u);
  // Hand count for one bit: MAJ = 2 cx + 6 in the Toffoli, carry-out cx,
  // UMA = 6 in the Toffoli + 2 cx.
  EXPECT_EQ(gen_cuccaro(1).count_two_qubit_gates(), 17u);
  EXPECT_THROW(gen_cuccaro(0), std::invalid_argument);
  BenchmarkSpec spec{Family::Cuccaro, 5};
  EXPECT_THROW(generate(spec), std::invalid_argument);
}

// Dense state-vector simulation of the gates the adder uses.
class StateVector {
 public:
  StateVector(std::size_t n, std::size_t basis)
      : amp_(std::size_t{1} << n) {
    amp_[basis] = 1.0;
  }

  void apply(const Gate &g) {
    const auto &q = g.qubits();
    const std::size_t m0 = std::size_t{1} << q[0];
    if (g.label() == "cx") {
      const std::size_t m1 = std::size_t{1} << q[1];
      for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & m0) && !(i & m1)) std::swap(amp_[i], amp_[i | m1]);
      }
      return;
    }
    if (g.label() == "h") {
      const double r = std::numbers::sqrt2 / 2;
      for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & m0) continue;
        const auto a = amp_[i], b = amp_[i | m0];
        amp_[i] = r * (a + b);
        amp_[i | m0] = r * (a - b);
      }
      return;
    }
    const double sign = g.label() == "t" ? 1.0 : -1.0;
    ASSERT_TRUE(g.label() == "t" || g.label() == "tdg") << g.label();
    const auto phase = std::polar(1.0, sign * std::numbers::pi / 4);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (i & m0) amp_[i] *= phase;
    }
  }

  // The basis state holding all the probability, or -1.
  long long basis() const {
    for (std::size_t i = 0; i < amp_.size(); ++i) {
      if (std::abs(std::abs(amp_[i]) - 1.0) < 1e-9) {
        return static_cast<long long>(i);
      }
    }
    return -1;
  }

 private:
  std::vector<std::complex<double>> amp_;
};

TEST(Cuccaro, AddsBasisStates) {
  for (std::size_t bits = 1; bits <= 3; ++bits) {
    const Circuit adder = gen_cuccaro(bits);
    const std::size_t n = adder.num_qubits();
    for (std::size_t a = 0; a < (1u << bits); ++a) {
      for (std::size_t b = 0; b < (1u << bits); ++b) {
        std::size_t in = 0;
        for (std::size_t i = 0; i < bits; ++i) {
          in |= ((a >> i) & 1) << (2 * i);
          in |= ((b >> i) & 1) << (2 * i + 1);
        }
        StateVector sv(n, in);
        for (const auto &g : adder.gates()) sv.apply(g);
        const long long out = sv.basis();
        ASSERT_GE(out, 0);
        const std::size_t sum = a + b;
        std::size_t expect = 0;
        for (std::size_t i = 0; i < bits; ++i) {
          expect |= ((a >> i) & 1) << (2 * i);
          expect |= ((sum >> i) & 1) << (2 * i + 1);
        }
        expect |= ((sum >> bits) & 1) << (2 * bits + 1);
        EXPECT_EQ(static_cast<std::size_t>(out), expect)
            << "bits=" << bits << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(QuantumVolume, CountsAndDeterminism) {
  const Circuit two = gen_quantum_volume(2, 1, 3);
  EXPECT_EQ(two.count_two_qubit_gates(), 3u);
  EXPECT_EQ(gen_quantum_volume(9, 4, 3).count_two_qubit_gates(), 4u * 3 * 4);
  EXPECT_EQ(gen_quantum_volume(9, 4, 3), gen_quantum_volume(9, 4, 3));
  EXPECT_NE(gen_quantum_volume(9, 4, 3), gen_quantum_volume(9, 4, 4));
  EXPECT_THROW(gen_quantum_volume(1, 1, 0), std::invalid_argument);
  EXPECT_THROW(gen_quantum_volume(4, 0, 0), std::invalid_argument);
}

TEST(QuantumVolume, LayersPairDisjointQubits) {
  const Circuit c = gen_quantum_volume(8, 1, 9);
  const auto slices = timeslice(c);
  std::set<Qubit> seen;
  for (const auto &g : c.gates()) {
    if (g.is_two_qubit()) {
      seen.insert(g.qubits()[0]);
      seen.insert(g.qubits()[1]);
    }
  }
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_GE(slices.num_slices(), 7u);
}

TEST(Grover, Counts) {
  const Circuit c = gen_grover(2, 1);
  EXPECT_EQ(c.count_two_qubit_gates(), 4u);
  EXPECT_EQ(gen_grover(6, 3).count_two_qubit_gates(), 3u * 4 * 5);
  EXPECT_THROW(gen_grover(1, 1), std::invalid_argument);
  EXPECT_THROW(gen_grover(3, 0), std::invalid_argument);
}

TEST(Grover, LadderIsSerialized) {
  const auto s = timeslice(gen_grover(5, 1));
  // Each ladder cx shares a qubit with the previous one, so no slice holds
  // two of them.
  for (const auto &slice : s.slices()) {
    std::size_t two = 0;
    for (const auto &g : slice) two += g.is_two_qubit();
    EXPECT_LE(two, 1u);
  }
}

TEST(Random, DensityExtremes) {
  EXPECT_EQ(gen_random(10, 5, 0.0, 1).count_two_qubit_gates(), 0u);
  EXPECT_EQ(gen_random(10, 5, 1.0, 1).count_two_qubit_gates(), 25u);
  EXPECT_EQ(gen_random(120, 20, 0.3, 1).count_two_qubit_gates(), 20u * 18);
  EXPECT_THROW(gen_random(10, 5, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(gen_random(10, 0, 0.5, 1), std::invalid_argument);
}

TEST(Random, EveryQubitActsEachCycle) {
  const Circuit c = gen_random(7, 4, 0.5, 2);
  EXPECT_EQ(c.gates().size(), 4u * (1 + 5));
  EXPECT_EQ(timeslice(c).num_slices(), 4u);
}

TEST(Family, NamesRoundTrip) {
  for (Family f : {Family::Ghz, Family::Cuccaro, Family::Qft,
                   Family::QuantumVolume, Family::Grover, Family::Random}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_EQ(parse_family("qv"), Family::QuantumVolume);
  EXPECT_FALSE(parse_family("bogus"));
}

TEST(Family, LabelsHaveNoCommas) {
  BenchmarkSpec spec{Family::Random, 10, 20, 0.3};
  EXPECT_EQ(spec.label(), "random(p=0.3;cycles=20)");
  spec.family = Family::QuantumVolume;
  EXPECT_EQ(spec.label(), "quantum_volume(depth=20)");
  spec.family = Family::Ghz;
  EXPECT_EQ(spec.label(), "ghz");
}

}  // namespace
}  // namespace mcmap
