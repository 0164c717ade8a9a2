// Copyright 2026 The privgibbs Authors
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

#ifndef PRIVGIBBS_RNG_HPP_
#define PRIVGIBBS_RNG_HPP_

#include <array>
#include <cstdint>

namespace privgibbs {

// Identifies one logical random stream. Replicates, chains and pipeline
// stages each own a distinct (seed, stream) pair; the same pair always
// reproduces the same variate sequence bit for bit.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RngStream&, const RngStream&) = default;
};

// Philox 4x64 counter-based generator, 10 rounds (the Random123 / NumPy
// parameterization). The (seed, stream) pair forms the key, so distinct
// streams are distinct keyed permutations of the counter space. A substream
// tag is stored in counter word 2 while only words 0-1 are incremented,
// which makes substreams of one stream provably non-overlapping (each owns
// a 2^128-draw segment).
class Philox4x64 {
 public:
  using result_type = std::uint64_t;

  Philox4x64(std::uint64_t seed, std::uint64_t stream,
             std::uint64_t substream = 0);
  explicit Philox4x64(RngStream s, std::uint64_t substream = 0)
      : Philox4x64(s.seed, s.stream, substream) {}

  result_type operator()();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

 private:
  void generate_block();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> block_;
  int block_pos_;
};

// Uniform-variate front end over the Philox engine. Model- and
// distribution-level samplers build everything else on top of these.
class Rng {
 public:
  explicit Rng(RngStream s, std::uint64_t substream = 0)
      : engine_(s, substream) {}
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0)
      : engine_(seed, stream, substream) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0, 1); safe as a log() argument.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  Philox4x64 engine_;
};

}  // namespace privgibbs

#endif  // PRIVGIBBS_RNG_HPP_
