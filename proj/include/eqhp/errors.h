/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EQHP_ERRORS_H_
#define EQHP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace eqhp {

// A request that is well-formed but outside the mathematical scope of the
// library (unsupported group order, too small a cutoff, bad divisor, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Sum of ring elements living in different RO(C_2) degrees.
class HomogeneityError : public DomainError {
 public:
  explicit HomogeneityError(const std::string& what) : DomainError(what) {}
};

// Malformed ring expression text.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DomainError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace eqhp

#endif  // EQHP_ERRORS_H_
