// Copyright 2026 The Authors.
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

#ifndef SYMDEC_TESTS_TEST_UTIL_HPP_
#define SYMDEC_TESTS_TEST_UTIL_HPP_

#include <functional>
#include <string_view>

#include "doctest.h"
#include "symdec/error.hpp"
#include "symdec/polynomial.hpp"

namespace symdec::testing {

inline Polynomial P(std::string_view coeffs) { return parse_polynomial(coeffs); }

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInternalError;
}

}  // namespace symdec::testing

#endif  // SYMDEC_TESTS_TEST_UTIL_HPP_
