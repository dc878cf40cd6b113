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

#include "wvg/lp.hpp"

#include <stdexcept>

namespace wvg::lp {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Exact rational over 64-bit integers. Any result that does not fit throws
// std::overflow_error, and the caller retries with GMP.
class Small {
 public:
  Small() = default;
  Small(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  static Small make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    if (num > kMax || num < -kMax || den > kMax) {
      throw std::overflow_error("rational overflow");
    }
    Small out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }

  friend Small operator+(const Small& a, const Small& b) {
    if (a.den_ == b.den_) return make(i128{a.num_} + b.num_, a.den_);
    const i128 g = gcd128(a.den_, b.den_);
    const i128 ad = a.den_ / g;
    const i128 bd = b.den_ / g;
    return make(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }
  friend Small operator-(const Small& a, const Small& b) { return a + (-b); }
  Small operator-() const {
    Small out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend Small operator*(const Small& a, const Small& b) {
    return make(i128{a.num_} * b.num_, i128{a.den_} * b.den_);
  }
  friend Small operator/(const Small& a, const Small& b) {
    return make(i128{a.num_} * b.den_, i128{a.den_} * b.num_);
  }
  friend bool operator<(const Small& a, const Small& b) {
    return i128{a.num_} * b.den_ < i128{b.num_} * a.den_;
  }
  friend bool operator==(const Small& a, const Small& b) = default;

  int sign() const { return (num_ > 0) - (num_ < 0); }
  Rational to_rational() const {
    Rational out{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    out.canonicalize();
    return out;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

int sign_of(const Small& v) { return v.sign(); }
int sign_of(const Rational& v) { return sgn(v); }
Rational as_rational(const Small& v) { return v.to_rational(); }
Rational as_rational(const Rational& v) { return v; }

template <class T>
class Tableau {
 public:
  explicit Tableau(const Problem& problem) : problem_(problem) { build(); }

  Solution solve() {
    Solution out;
    // Phase 1: maximize minus the sum of artificial variables.
    if (num_artificial_ > 0) {
      std::vector<T> cost(static_cast<std::size_t>(cols_), T(0));
      for (int j = first_artificial_; j < cols_; ++j) cost[static_cast<std::size_t>(j)] = T(-1);
      set_objective(cost);
      run(cols_);
      if (sign_of(value()) < 0) {
        out.status = Status::infeasible;
        return out;
      }
      drive_out_artificials();
    }
    std::vector<T> cost(static_cast<std::size_t>(cols_), T(0));
    for (int j = 0; j < problem_.num_vars; ++j) {
      cost[static_cast<std::size_t>(j)] = T(problem_.objective[static_cast<std::size_t>(j)]);
    }
    set_objective(cost);
    if (!run(first_artificial_)) {
      out.status = Status::unbounded;
      return out;
    }
    out.status = Status::optimal;
    out.objective = as_rational(value());
    out.x.assign(static_cast<std::size_t>(problem_.num_vars), Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < problem_.num_vars) {
        out.x[static_cast<std::size_t>(basis_[i])] = as_rational(rhs(i));
      }
    }
    return out;
  }

 private:
  void build() {
    const int n = problem_.num_vars;
    int slack = 0;
    int artificial = 0;
    for (const auto& row : problem_.rows) {
      const Sense sense = effective_sense(row);
      if (sense != Sense::equal) ++slack;
      if (sense != Sense::at_most) ++artificial;
    }
    num_artificial_ = artificial;
    first_artificial_ = n + slack;
    cols_ = n + slack + artificial;
    int next_slack = n;
    int next_artificial = first_artificial_;
    for (const auto& row : problem_.rows) {
      const bool flip = row.rhs < 0;
      std::vector<T> line(static_cast<std::size_t>(cols_ + 1), T(0));
      for (int j = 0; j < n; ++j) {
        const std::int64_t c = row.coeffs[static_cast<std::size_t>(j)];
        line[static_cast<std::size_t>(j)] = T(flip ? -c : c);
      }
      line[static_cast<std::size_t>(cols_)] = T(flip ? -row.rhs : row.rhs);
      const Sense sense = effective_sense(row);
      int basic = -1;
      if (sense == Sense::at_most) {
        line[static_cast<std::size_t>(next_slack)] = T(1);
        basic = next_slack++;
      } else {
        if (sense == Sense::at_least) line[static_cast<std::size_t>(next_slack++)] = T(-1);
        line[static_cast<std::size_t>(next_artificial)] = T(1);
        basic = next_artificial++;
      }
      rows_.push_back(std::move(line));
      basis_.push_back(basic);
    }
  }

  static Sense effective_sense(const Row& row) {
    if (row.rhs >= 0 || row.sense == Sense::equal) return row.sense;
    return row.sense == Sense::at_most ? Sense::at_least : Sense::at_most;
  }

  const T& rhs(std::size_t i) const { return rows_[i][static_cast<std::size_t>(cols_)]; }
  const T& value() const { return objective_[static_cast<std::size_t>(cols_)]; }

  // Reduced-cost row for maximizing cost . x under the current basis.
  void set_objective(const std::vector<T>& cost) {
    objective_.assign(static_cast<std::size_t>(cols_ + 1), T(0));
    for (int j = 0; j < cols_; ++j) objective_[static_cast<std::size_t>(j)] = -cost[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T& cb = cost[static_cast<std::size_t>(basis_[i])];
      if (sign_of(cb) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (sign_of(rows_[i][static_cast<std::size_t>(j)]) != 0) {
          objective_[static_cast<std::size_t>(j)] =
              objective_[static_cast<std::size_t>(j)] + cb * rows_[i][static_cast<std::size_t>(j)];
        }
      }
    }
  }

  // Bland's rule; columns >= `limit` never enter. Returns false when
  // unbounded.
  bool run(int limit) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (sign_of(objective_[static_cast<std::size_t>(j)]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      T best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const T& a = rows_[i][static_cast<std::size_t>(enter)];
        if (sign_of(a) <= 0) continue;
        T ratio = rhs(i) / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[static_cast<std::size_t>(leave)])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(static_cast<std::size_t>(leave), enter);
    }
  }

  void pivot(std::size_t r, int c) {
    auto& prow = rows_[r];
    const T inv = T(1) / prow[static_cast<std::size_t>(c)];
    for (auto& v : prow) {
      if (sign_of(v) != 0) v = v * inv;
    }
    const auto eliminate = [&](std::vector<T>& line) {
      const T factor = line[static_cast<std::size_t>(c)];
      if (sign_of(factor) == 0) return;
      for (int j = 0; j <= cols_; ++j) {
        const T& p = prow[static_cast<std::size_t>(j)];
        if (sign_of(p) != 0) {
          line[static_cast<std::size_t>(j)] = line[static_cast<std::size_t>(j)] - factor * p;
        }
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (sign_of(rows_[i][static_cast<std::size_t>(j)]) != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant constraint.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  const Problem& problem_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> basis_;
  std::vector<T> objective_;
  int cols_ = 0;
  int first_artificial_ = 0;
  int num_artificial_ = 0;
};

void validate(const Problem& problem) {
  if (problem.num_vars < 0 ||
      problem.objective.size() != static_cast<std::size_t>(problem.num_vars)) {
    throw std::invalid_argument("objective length must equal num_vars");
  }
  for (const auto& row : problem.rows) {
    if (row.coeffs.size() != static_cast<std::size_t>(problem.num_vars)) {
      throw std::invalid_argument("row length must equal num_vars");
    }
  }
}

}  // namespace

Solution maximize(const Problem& problem) {
  validate(problem);
  try {
    return Tableau<Small>(problem).solve();
  } catch (const std::overflow_error&) {
    Solution out = Tableau<Rational>(problem).solve();
    out.used_bignum = true;
    return out;
  }
}

Solution maximize_bignum(const Problem& problem) {
  validate(problem);
  Solution out = Tableau<Rational>(problem).solve();
  out.used_bignum = true;
  return out;
}

}  // namespace wvg::lp
