// Copyright 2026 The mcmap Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcmap/circuit.hpp"

namespace mcmap {

/** Parse failure with a 1-based source position. */
class QasmError : public std::runtime_error {
 public:
  QasmError(const std::string &message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/**
 * Parses the OpenQASM 2.0 subset used by the toolkit.
 *
 * Supported: the version header, `include`, any number of `qreg`
 * declarations (flattened in declaration order), `creg`, `measure` and
 * `barrier` (both dropped), and indexed applications of
 * h x y z s sdg t tdg rx ry rz u1 u2 u3 cx cz cp crz swap.
 * Parameter expressions may use numbers, pi, + - * / ^, parentheses and
 * sin cos tan exp ln sqrt.
 */
Circuit parse_qasm(std::string_view text);

/** Canonical text: header, a single `qreg q[n];`, one gate per line. */
std::string serialize_qasm(const Circuit &circuit);

}  // namespace mcmap
