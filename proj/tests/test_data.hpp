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

#ifndef ZETAVERIFY_TESTS_TEST_DATA_HPP
#define ZETAVERIFY_TESTS_TEST_DATA_HPP

#include <string>
#include <vector>

#include "zero_catalog.hpp"

#ifndef ZV_TEST_DATA_DIR
#define ZV_TEST_DATA_DIR "data"
#endif

namespace zvtest {

inline std::string reference_table_path() {
  return std::string(ZV_TEST_DATA_DIR) + "/zeros_2000.txt";
}

inline const zv::ZeroCatalog& reference_catalog() {
  static const zv::ZeroCatalog cat = zv::ZeroCatalog::load_odlyzko(reference_table_path());
  return cat;
}

inline std::vector<double> load_reference_ordinates() {
  const auto s = reference_catalog().ordinates();
  return {s.begin(), s.end()};
}

}  // namespace zvtest

#endif  // ZETAVERIFY_TESTS_TEST_DATA_HPP
