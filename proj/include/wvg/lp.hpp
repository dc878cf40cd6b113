// Copyright 2026 The wvg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WVG_LP_HPP_
#define WVG_LP_HPP_

#include <cstdint>
#include <vector>

#include "wvg/rational.hpp"

namespace wvg::lp {

enum class Sense { at_most, at_least, equal };

// coeffs . x  (<=, >=, =)  rhs, over nonnegative variables.
struct Row {
  std::vector<std::int64_t> coeffs;
  Sense sense = Sense::at_most;
  std::int64_t rhs = 0;
};

struct Problem {
  int num_vars = 0;
  std::vector<std::int64_t> objective;  // maximized
  std::vector<Row> rows;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> x;
  // Set when the 64-bit fast path overflowed and GMP finished the solve.
  bool used_bignum = false;
};

// Two-phase primal simplex with Bland's rule in exact rational arithmetic.
Solution maximize(const Problem& problem);

// Runs only the arbitrary-precision path.
Solution maximize_bignum(const Problem& problem);

}  // namespace wvg::lp

#endif  // WVG_LP_HPP_
