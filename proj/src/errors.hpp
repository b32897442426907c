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

#ifndef ZETAVERIFY_ERRORS_HPP
#define ZETAVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zv {

enum class Errc {
  invalid_argument,
  pole_at_one,
  params_insufficient,
  zero_on_path,
  parse,
  order,
  range,
  degenerate_argument,
  truncation_exceeds_table,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Error(Errc code, const std::string& what, long line)
      : std::runtime_error(what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  // 1-based input line for parse/order errors, -1 otherwise.
  long line() const noexcept { return line_; }

 private:
  Errc code_;
  long line_ = -1;
};

}  // namespace zv

#endif  // ZETAVERIFY_ERRORS_HPP
