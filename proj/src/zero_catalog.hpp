// Copyright 2026 The zetaverify authors
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

#ifndef ZETAVERIFY_ZERO_CATALOG_HPP
#define ZETAVERIFY_ZERO_CATALOG_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace zv {

// A user-supplied off-critical-line zero used to exercise the
// zero-contribution machinery; never read from disk catalogs.
struct HypotheticalZero {
  double sigma = 0.5;   // in (0, 1)
  double t = 0;         // ordinate
  int multiplicity = 1;
};

// Validated, sorted ordinates of nontrivial zeros read from a plain-text
// table (one decimal per line, any decimal width). Immutable after load.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;
  explicit ZeroCatalog(std::vector<double> ordinates, std::string source_path = {});

  // Parses `path`; validates strictly increasing ordinates with the first
  // one in [14.13, 14.14]. When `use_cache` is set, a binary sidecar
  // (path + ".zvcache") is consulted first and written after a text parse.
  static ZeroCatalog load_odlyzko(const std::filesystem::path& path, bool use_cache = true);

  // Ordinates <= T, in order. Throws Error(truncation_exceeds_table) when
  // T > t_max so callers cannot silently run with an incomplete sum.
  std::span<const double> zeros_up_to(double T) const;

  std::span<const double> ordinates() const { return ordinates_; }
  std::size_t count() const { return ordinates_.size(); }
  double t_max() const { return ordinates_.empty() ? 0.0 : ordinates_.back(); }
  const std::string& source_path() const { return source_path_; }

  // Binary sidecar format (all little-endian):
  //   bytes 0..7   magic "ZVZC0001"
  //   bytes 8..15  u64 FNV-1a of the source text bytes
  //   bytes 16..23 u64 ordinate count
  //   then count * f64 ordinates
  //   final u64    FNV-1a of all preceding bytes
  static void write_cache(const ZeroCatalog& cat, const std::filesystem::path& cache_path,
                          std::uint64_t source_hash);
  static bool read_cache(const std::filesystem::path& cache_path, std::uint64_t source_hash,
                         ZeroCatalog* out);

 private:
  void validate() const;

  std::vector<double> ordinates_;
  std::string source_path_;
};

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 14695981039346656037ull);

}  // namespace zv

#endif  // ZETAVERIFY_ZERO_CATALOG_HPP
