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

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "errors.hpp"
#include "test_data.hpp"

namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::trunc);
  out << contents;
  return p;
}

zv::Errc code_of_load(const fs::path& p) {
  try {
    (void)zv::ZeroCatalog::load_odlyzko(p, false);
  } catch (const zv::Error& e) {
    return e.code();
  }
  return zv::Errc::internal;
}

}  // namespace

TEST_CASE("parse a small well-formed table") {
  const auto p = write_temp("zv_small.txt", "14.134725142\n21.022039639\n25.010857580\n");
  const auto cat = zv::ZeroCatalog::load_odlyzko(p, false);
  CHECK(cat.count() == 3);
  CHECK(cat.t_max() == doctest::Approx(25.0109).epsilon(1e-4));
  CHECK(cat.ordinates()[0] == doctest::Approx(14.134725142).epsilon(1e-12));
}

TEST_CASE("whitespace and blank lines are tolerated, width is free") {
  const auto p = write_temp("zv_ws.txt", "  14.1347251\t\n\n 21.02203964 \n25.0108575801234\n\n");
  const auto cat = zv::ZeroCatalog::load_odlyzko(p, false);
  CHECK(cat.count() == 3);
}

TEST_CASE("empty file yields a valid empty catalog") {
  const auto p = write_temp("zv_empty.txt", "");
  const auto cat = zv::ZeroCatalog::load_odlyzko(p, false);
  CHECK(cat.count() == 0);
  CHECK(cat.zeros_up_to(1000.0).empty());
}

TEST_CASE("ordering, parsing and range violations") {
  CHECK(code_of_load(write_temp("zv_bad1.txt", "21.02\n14.13\n")) == zv::Errc::order);
  CHECK(code_of_load(write_temp("zv_bad2.txt", "14.134725142\nnot-a-number\n")) == zv::Errc::parse);
  CHECK(code_of_load(write_temp("zv_bad3.txt", "15.0\n21.0\n")) == zv::Errc::range);
  // duplicates within 1e-9 are ordering violations
  CHECK(code_of_load(write_temp("zv_bad4.txt", "14.134725142\n14.1347251421\n")) ==
        zv::Errc::order);
  // parse errors carry the 1-based line number
  try {
    (void)zv::ZeroCatalog::load_odlyzko(write_temp("zv_bad5.txt", "14.134725142\n\nxyz\n"), false);
    FAIL("expected parse error");
  } catch (const zv::Error& e) {
    CHECK(e.code() == zv::Errc::parse);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("zeros_up_to on the reference table") {
  const auto& cat = zvtest::reference_catalog();
  // the honest counts; see the acceptance notes on the historical 137
  CHECK(cat.zeros_up_to(300.0).size() == 138);
  CHECK(cat.zeros_up_to(1000.0).size() == 649);
  CHECK(cat.zeros_up_to(2000.0).size() == 1517);
  CHECK(cat.zeros_up_to(1.0).empty());
  CHECK_THROWS_AS((void)cat.zeros_up_to(1e6), zv::Error);
}

TEST_CASE("counting-function sanity against the first-order density") {
  const auto& cat = zvtest::reference_catalog();
  for (double T : {100.0, 300.0, 1000.0}) {
    const double predicted =
        T / (2 * std::numbers::pi) * std::log(T / (2 * std::numbers::pi * std::numbers::e)) +
        7.0 / 8.0;
    const double count = double(cat.zeros_up_to(T).size());
    CHECK(std::abs(count - predicted) <= 2.0);
  }
}

TEST_CASE("binary cache round-trips bit-for-bit and rejects corruption") {
  const auto p = write_temp("zv_cache_src.txt", "14.134725142\n21.022039639\n25.010857580\n");
  const fs::path cache = p.string() + ".zvcache";
  std::error_code ec;
  fs::remove(cache, ec);

  const auto first = zv::ZeroCatalog::load_odlyzko(p, true);
  REQUIRE(fs::exists(cache));
  const auto second = zv::ZeroCatalog::load_odlyzko(p, true);  // served from cache
  REQUIRE(second.count() == first.count());
  for (size_t i = 0; i < first.count(); ++i)
    CHECK(std::memcmp(&first.ordinates()[i], &second.ordinates()[i], sizeof(double)) == 0);

  // flip one payload byte: the checksum must reject it and the text parse win
  {
    std::fstream f(cache, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(26);
    char c;
    f.seekg(26);
    f.get(c);
    f.seekp(26);
    f.put(char(c ^ 0x5a));
  }
  const auto third = zv::ZeroCatalog::load_odlyzko(p, true);
  CHECK(third.count() == 3);
  CHECK(std::memcmp(&first.ordinates()[1], &third.ordinates()[1], sizeof(double)) == 0);

  // a source edit invalidates the cache via the source hash
  write_temp("zv_cache_src.txt", "14.134725142\n21.022039639\n");
  const auto fourth = zv::ZeroCatalog::load_odlyzko(p, true);
  CHECK(fourth.count() == 2);
}

TEST_CASE("explicit cache write/read pair") {
  const auto& cat = zvtest::reference_catalog();
  const fs::path cache = fs::temp_directory_path() / "zv_explicit.zvcache";
  zv::ZeroCatalog::write_cache(cat, cache, 1234);
  zv::ZeroCatalog out;
  REQUIRE(zv::ZeroCatalog::read_cache(cache, 1234, &out));
  REQUIRE(out.count() == cat.count());
  CHECK(std::memcmp(out.ordinates().data(), cat.ordinates().data(),
                    cat.count() * sizeof(double)) == 0);
  CHECK_FALSE(zv::ZeroCatalog::read_cache(cache, 999, &out));  // wrong source hash
}
