// include/xmodal/common.hpp

// Copyright 2026  The xmodal authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef XMODAL_COMMON_HPP_
#define XMODAL_COMMON_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xmodal {

/// Which side of a paired dataset / model an operation refers to.
enum class View { A, B };

// Error hierarchy. The three mid-level categories map onto the CLI exit
// codes: ConfigError -> 2, DataError -> 3, NumericError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct DataError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};

// File / dataset errors.
struct BadMagic : DataError {
  using DataError::DataError;
};
struct TruncatedFile : DataError {
  using DataError::DataError;
};
struct NonFinite : DataError {
  using DataError::DataError;
};
struct IoFailure : DataError {
  using DataError::DataError;
};
struct FormatError : DataError {
  using DataError::DataError;
};
struct ClassTooSmall : DataError {
  using DataError::DataError;
};
struct NoOverlap : DataError {
  using DataError::DataError;
};
struct IndexOutOfRange : DataError {
  using DataError::DataError;
};
struct SingleClass : DataError {
  using DataError::DataError;
};
struct DimMismatch : DataError {
  using DataError::DataError;
};

// Configuration errors.
struct InvalidConfig : ConfigError {
  using ConfigError::ConfigError;
};

// Numeric errors.
struct TooFewSamples : NumericError {
  using NumericError::NumericError;
};
struct DegenerateCovariance : NumericError {
  using NumericError::NumericError;
};
struct ZeroVector : NumericError {
  using NumericError::NumericError;
};

/// Raised when training produces a non-finite objective. Carries the
/// objective trace accumulated up to the failing epoch.
struct NonFiniteLoss : NumericError {
  NonFiniteLoss(const std::string& what,
                std::vector<std::pair<int, double>> trace_so_far)
      : NumericError(what), trace(std::move(trace_so_far)) {}
  std::vector<std::pair<int, double>> trace;
};

/// Deterministic random source. All stochastic code in the library draws
/// from this class only, with pinned algorithms (Box-Muller normals,
/// rejection-sampled bounded integers, Fisher-Yates shuffles), so a seed
/// fully determines every artifact the pipeline writes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal();

  /// Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derives a per-component seed from the pipeline root seed, so that every
/// stochastic stage gets an independent stream (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// FNV-1a 64-bit hash, used for config fingerprints in model bundles.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace xmodal

#endif  // XMODAL_COMMON_HPP_
