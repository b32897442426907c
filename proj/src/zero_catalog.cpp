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

#include "zero_catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace zv {

namespace {

constexpr char kMagic[8] = {'Z', 'V', 'Z', 'C', '0', '0', '0', '1'};
constexpr double kDuplicateTol = 1e-9;  // source tables carry 9 decimals

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | std::uint8_t(p[i]);
  return v;
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* p = static_cast<const std::uint8_t*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

ZeroCatalog::ZeroCatalog(std::vector<double> ordinates, std::string source_path)
    : ordinates_(std::move(ordinates)), source_path_(std::move(source_path)) {
  validate();
}

void ZeroCatalog::validate() const {
  if (ordinates_.empty()) return;
  if (ordinates_.front() < 14.13 || ordinates_.front() > 14.14)
    throw Error(Errc::range, "zero catalog: first ordinate outside [14.13, 14.14]");
  for (std::size_t i = 1; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] - ordinates_[i - 1] >= kDuplicateTol))
      throw Error(Errc::order,
                  "zero catalog: ordinates not strictly increasing at entry " + std::to_string(i + 1),
                  long(i + 1));
  }
}

ZeroCatalog ZeroCatalog::load_odlyzko(const std::filesystem::path& path, bool use_cache) {
  const std::string text = read_file_bytes(path);
  const std::uint64_t source_hash = fnv1a64(text.data(), text.size());
  const std::filesystem::path cache_path = path.string() + ".zvcache";

  if (use_cache) {
    ZeroCatalog cached;
    if (read_cache(cache_path, source_hash, &cached)) {
      cached.source_path_ = path.string();
      return cached;
    }
  }

  std::vector<double> ords;
  long line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line(text.data() + pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r'))
      line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    double v = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || ptr != line.data() + line.size() || !(v > 0))
      throw Error(Errc::parse, "zero catalog: malformed line " + std::to_string(line_no), line_no);
    if (!ords.empty() && !(v - ords.back() >= kDuplicateTol))
      throw Error(Errc::order, "zero catalog: not strictly increasing at line " + std::to_string(line_no),
                  line_no);
    ords.push_back(v);
  }

  ZeroCatalog cat(std::move(ords), path.string());
  if (use_cache) {
    try {
      write_cache(cat, cache_path, source_hash);
    } catch (const Error&) {
      // cache is an optimization; a read-only directory is fine
    }
  }
  return cat;
}

std::span<const double> ZeroCatalog::zeros_up_to(double T) const {
  if (!(T >= 0)) throw Error(Errc::invalid_argument, "zeros_up_to: need T >= 0");
  if (ordinates_.empty()) return {};  // vacuous table: identities run with empty sums
  if (T > t_max())
    throw Error(Errc::truncation_exceeds_table,
                "zeros_up_to: T exceeds the table maximum " + std::to_string(t_max()));
  const auto it = std::upper_bound(ordinates_.begin(), ordinates_.end(), T);
  return {ordinates_.data(), std::size_t(it - ordinates_.begin())};
}

void ZeroCatalog::write_cache(const ZeroCatalog& cat, const std::filesystem::path& cache_path,
                              std::uint64_t source_hash) {
  std::string buf;
  buf.reserve(32 + 8 * cat.ordinates_.size());
  buf.append(kMagic, sizeof kMagic);
  put_u64(buf, source_hash);
  put_u64(buf, cat.ordinates_.size());
  for (double d : cat.ordinates_) put_u64(buf, std::bit_cast<std::uint64_t>(d));
  put_u64(buf, fnv1a64(buf.data(), buf.size()));

  std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot write " + cache_path.string());
  out.write(buf.data(), std::streamsize(buf.size()));
}

bool ZeroCatalog::read_cache(const std::filesystem::path& cache_path, std::uint64_t source_hash,
                             ZeroCatalog* out) {
  std::error_code ec;
  if (!std::filesystem::exists(cache_path, ec)) return false;
  std::string buf;
  try {
    buf = read_file_bytes(cache_path);
  } catch (const Error&) {
    return false;
  }
  if (buf.size() < 32 || std::memcmp(buf.data(), kMagic, sizeof kMagic) != 0) return false;
  if (get_u64(buf.data() + buf.size() - 8) != fnv1a64(buf.data(), buf.size() - 8)) return false;
  if (get_u64(buf.data() + 8) != source_hash) return false;
  const std::uint64_t count = get_u64(buf.data() + 16);
  if (buf.size() != 32 + 8 * count) return false;
  std::vector<double> ords(count);
  for (std::uint64_t i = 0; i < count; ++i)
    ords[i] = std::bit_cast<double>(get_u64(buf.data() + 24 + 8 * i));
  try {
    *out = ZeroCatalog(std::move(ords));
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace zv
