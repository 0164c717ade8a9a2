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

#include "privgibbs/rng.hpp"

namespace privgibbs {

namespace {

constexpr std::uint64_t kMultiplier0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMultiplier1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t* hi,
                      std::uint64_t* lo) {
  const unsigned __int128 product =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  *hi = static_cast<std::uint64_t>(product >> 64);
  *lo = static_cast<std::uint64_t>(product);
}

inline void philox_round(std::array<std::uint64_t, 4>& ctr,
                         const std::array<std::uint64_t, 2>& key) {
  std::uint64_t hi0, lo0, hi1, lo1;
  mul_hi_lo(kMultiplier0, ctr[0], &hi0, &lo0);
  mul_hi_lo(kMultiplier1, ctr[2], &hi1, &lo1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

Philox4x64::Philox4x64(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t substream)
    : key_{seed, stream}, counter_{0, 0, substream, 0}, block_pos_(4) {}

void Philox4x64::generate_block() {
  std::array<std::uint64_t, 4> ctr = counter_;
  std::array<std::uint64_t, 2> key = key_;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    philox_round(ctr, key);
  }
  block_ = ctr;
  if (++counter_[0] == 0) ++counter_[1];  // words 2-3 are reserved tags
  block_pos_ = 0;
}

Philox4x64::result_type Philox4x64::operator()() {
  if (block_pos_ == 4) generate_block();
  return block_[block_pos_++];
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

}  // namespace privgibbs
