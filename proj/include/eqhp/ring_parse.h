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
// Text syntax for elements of the C_2 ring.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | 'e' | 'x' | 'c' | 'CC' | '(' expr ')'
//
// A generator may carry its exponent directly ("x2" is x^2). Whitespace is
// ignored. The literal 0 is the zero element without a degree.
#ifndef EQHP_RING_PARSE_H_
#define EQHP_RING_PARSE_H_

#include <string_view>

#include "eqhp/ring_c2.h"

namespace eqhp {

// Throws ParseError with the byte offset of the offending token, and
// HomogeneityError naming the offset of the first term whose degree differs.
RingElement ParseRingExpression(std::string_view text);

}  // namespace eqhp

#endif  // EQHP_RING_PARSE_H_
