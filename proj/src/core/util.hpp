// Copyright 2026 The uvl Authors.
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

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace uvl {

/// Deterministic RNG (splitmix64). All randomness in the engine flows
/// through this so a seed fully determines output on every platform;
/// std:: distributions are implementation-defined and never used.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

/// FNV-1a 64-bit content fingerprint (not cryptographic).
uint64_t fnv1a64(const void* data, size_t len);
std::string fnv1a64_hex_of_file(const std::filesystem::path& path);

/// Write `content` to `path` via a temp file + rename in the same directory.
void atomic_write(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// Half-up rounding to 2 decimals (reporting style for percentages).
inline double round2(double x) { return std::floor(x * 100.0 + 0.5) / 100.0; }

/// Run fn(begin, end) over [0, n) split into contiguous chunks on up to
/// `jobs` threads. jobs <= 1 runs inline. Chunks are disjoint, so any fn
/// writing only to its own index range is deterministic.
void parallel_for(size_t n, int jobs, const std::function<void(size_t, size_t)>& fn);

std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace uvl
