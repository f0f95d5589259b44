//
// Copyright 2026 The robustdp Authors.
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
//

#ifndef ROBUSTDP_RANDOM_H_
#define ROBUSTDP_RANDOM_H_

#include <array>
#include <cstdint>
#include <initializer_list>

namespace robustdp {

// Philox4x32-10 block function. Every output block is a pure function of
// (counter, key), so draws can be addressed directly by index instead of
// being consumed from a stateful engine.
class Philox4x32 {
 public:
  using Counter = std::array<uint32_t, 4>;
  using Key = std::array<uint32_t, 2>;

  static Counter Generate(Counter counter, Key key);
};

// Stream identifiers separating the independent uses of one seed.
enum class StreamId : uint64_t {
  kNoise = 1,
  kSample = 2,
  kCorruptionSelect = 3,
  kCorruptionJitter = 4,
  kDirections = 5,
  kPowerRestart = 6,
};

// Deterministic random draws addressed by (seed, stream, index). Copyable,
// stateless apart from its address; safe to share across threads.
class CounterStream {
 public:
  CounterStream(uint64_t seed, StreamId stream)
      : seed_(seed), stream_(static_cast<uint64_t>(stream)) {}

  // Uniform in the open interval (0, 1) with 53 bits of resolution.
  double Uniform(uint64_t index) const;

  // Standard normal draw (Box-Muller, cosine branch).
  double StandardNormal(uint64_t index) const;

  uint64_t Bits(uint64_t index) const;

 private:
  Philox4x32::Counter Block(uint64_t index) const;

  uint64_t seed_;
  uint64_t stream_;
};

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Order-sensitive hash of a list of integers, used to derive per-trial seeds.
uint64_t HashSeedParts(std::initializer_list<uint64_t> parts);

}  // namespace robustdp

#endif  // ROBUSTDP_RANDOM_H_
