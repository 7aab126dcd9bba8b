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

#include "eqhp/ring_parse.h"

#include <cctype>
#include <climits>
#include <string>

#include "eqhp/errors.h"

namespace eqhp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingElement Parse() {
    SkipSpace();
    if (AtEnd()) throw ParseError("empty expression", pos_);
    RingElement value = Expr();
    SkipSpace();
    if (!AtEnd()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return value;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Accept(char ch) {
    SkipSpace();
    if (!AtEnd() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool AtDigit() const {
    return !AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long long Integer() {
    const std::size_t start = pos_;
    long long value = 0;
    while (AtDigit()) {
      const int digit = text_[pos_] - '0';
      if (value > (LLONG_MAX - digit) / 10) throw ParseError("integer too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  RingElement Accumulate(const RingElement& sum, const RingElement& term,
                         std::size_t term_start) {
    try {
      return sum + term;
    } catch (const HomogeneityError& e) {
      throw HomogeneityError(std::string("non-homogeneous sum at offset ") +
                             std::to_string(term_start) + ": " + e.what());
    }
  }

  RingElement Expr() {
    const bool negate = Accept('-');
    RingElement sum = Term();
    if (negate) sum = -sum;
    while (true) {
      if (Accept('+')) {
        SkipSpace();
        const std::size_t term_start = pos_;
        sum = Accumulate(sum, Term(), term_start);
      } else if (Accept('-')) {
        SkipSpace();
        const std::size_t term_start = pos_;
        sum = Accumulate(sum, -Term(), term_start);
      } else {
        break;
      }
    }
    return sum;
  }

  RingElement Term() {
    RingElement product = Factor();
    while (Accept('*')) product = product * Factor();
    return product;
  }

  RingElement Factor() {
    RingElement base = Primary();
    if (Accept('^')) {
      SkipSpace();
      if (!AtDigit()) throw ParseError("expected exponent", pos_);
      const std::size_t start = pos_;
      const long long exponent = Integer();
      if (exponent > 10000) throw ParseError("exponent too large", start);
      base = Power(base, static_cast<int>(exponent));
    }
    return base;
  }

  // Exponent written directly after a generator, as in "x2".
  int InlineExponent() {
    if (!AtDigit()) return 1;
    const std::size_t start = pos_;
    const long long exponent = Integer();
    if (exponent > 10000) throw ParseError("exponent too large", start);
    return static_cast<int>(exponent);
  }

  RingElement Primary() {
    SkipSpace();
    if (AtEnd()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      return RingElement::Integer(Integer());
    }
    if (ch == '(') {
      ++pos_;
      RingElement inner = Expr();
      if (!Accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    Monomial generator;
    if (text_.substr(pos_, 2) == "CC") {
      pos_ += 2;
      generator.j = 1;
    } else if (ch == 'e') {
      ++pos_;
      generator.a = 1;
    } else if (ch == 'x') {
      ++pos_;
      generator.b = 1;
    } else if (ch == 'c') {
      ++pos_;
      generator.i = 1;
    } else {
      throw ParseError(std::string("unexpected '") + ch + "'", start);
    }
    if (!AtEnd() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("unknown identifier", start);
    }
    return Power(RingElement::FromMonomial(generator), InlineExponent());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement ParseRingExpression(std::string_view text) {
  return Parser(text).Parse();
}

}  // namespace eqhp
