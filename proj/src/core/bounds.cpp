// Copyright 2026 The bcmd Authors
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

#include "bcmd/bounds.hpp"

#include <cmath>

#include "bcmd/error.hpp"

namespace bcmd {

BoundSet eval_bounds(const BoundInputs& in) {
  if (in.n < 2) throw Error(ErrorCode::kInvalidArgument, "bounds need n >= 2");
  if (in.k < 1) throw Error(ErrorCode::kInvalidArgument, "bounds need k >= 1");

  const double n = static_cast<double>(in.n);
  const double parts = static_cast<double>(in.k) + 1.0;
  BoundSet b;

  if (2 * in.k <= in.n) {
    b.path_lower = n / (2.0 * parts) + std::log2(parts) - 2.0;
    b.path_upper = n / parts + 4.0 * std::log2(parts) + 1.0;
  }
  b.cg_lower = n / parts - 1.0;
  b.cg_upper = n / parts + 3.0;

  if (in.diameter) {
    b.general_lower = (static_cast<double>(*in.diameter) + 1.0) / parts - 1.0;
  }
  if (in.optimum) {
    const double opt = static_cast<double>(*in.optimum);
    const double base = static_cast<double>(in.beta * in.delta) - 1.0;
    if (in.beta >= 1 && base >= 2.0) {
      const double beta = static_cast<double>(in.beta);
      b.log_approx_upper =
          2.0 * (beta - 1.0 + opt + beta * std::log2(parts) / std::log2(base));
    }
    b.const_approx_upper = 4.0 * opt + 2.0;
  }
  return b;
}

}  // namespace bcmd
