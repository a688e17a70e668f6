// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQLAB_RNG_H_
#define SQLAB_RNG_H_

#include <array>
#include <cstdint>
#include <string_view>

namespace sqlab {

// Counter-based random stream (Philox4x32-10). The pair (seed, stream_id)
// fixes the whole sequence; the 64-bit block counter advances as draws are
// consumed, so two streams never share state and can be handed to different
// workers freely.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform();
  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;  // 64-bit words remaining in buffer_
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// Deterministic child stream. For a fixed parent, distinct indices give
// distinct streams; different parents map to different child keys through a
// 64-bit mixing function.
RngStream spawn_substream(const RngStream& parent, std::uint64_t index);

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a, used to key experiments by name.
std::uint64_t hash_name(std::string_view name);

// Accepts decimal ("12345") or hex ("0x3039") 64-bit seeds.
std::uint64_t parse_seed(std::string_view text);

// One round of the raw Philox4x32-10 bijection, exposed for known-answer
// tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

}  // namespace sqlab

#endif  // SQLAB_RNG_H_
