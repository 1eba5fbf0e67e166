#pragma once

#include <functional>
#include <string>

#include "qseries/series.hpp"

namespace qseries {

/// sum over integers m of (-1)^m q^{(A m^2 + B m)/2 + C} / (1 - q^{D m + E}),
/// omitting m = 0 when primed.
struct BilateralSpec {
  int A = 1;
  int B = 1;
  int C = 0;
  int D = 1;
  int E = 1;
  bool primed = false;

  /// Throws InvalidConstruction (A <= 0, A + B odd) or PoleError (a
  /// vanishing denominator that is not the skipped m = 0 term).
  void validate() const;

  long exponent(long m) const { return (static_cast<long>(A) * m * m + static_cast<long>(B) * m) / 2 + C; }
  long denominator(long m) const { return static_cast<long>(D) * m + E; }

  std::string str() const;
};

/// The m-th term with the rewrite 1/(1 - q^{-k}) = -q^k/(1 - q^k) applied
/// when the denominator exponent is negative.
Series bilateral_term(const BilateralSpec& spec, long m, int order);

/// The full (primed or not) sum. The m-range grows outward from 0 and stops
/// in each direction after three consecutive terms lie wholly past `order`.
Series eval_bilateral(const BilateralSpec& spec, int order);

/// Same as eval_bilateral but requires spec.primed.
Series eval_primed(const BilateralSpec& spec, int order);

/// m(q^a, q^M, q^b) = -q^b / j(q^b; q^M) *
///   sum_r (-1)^r q^{M r(r+1)/2 + b r} / (1 - q^{a + b + M r}).
Series appell_m(int a, int M, int b, int order);

/// The change-of-z product for m(x,q,z1) - m(x,q,z0) at x = q^a, q -> q^M,
/// z0 = q^{b0}, z1 = q^{b1}.
Series appell_change_z(int a, int M, int b0, int b1, int order);

/// sum_{j>=0} q^{b + a j} / (1 - q^{d + c j}).
Series lambert(int a, int b, int c, int d, int order);

/// sum_{n>=1} (-1)^n q^{n(n+1)/2} (1 - q^n)^{k-2} (1 + q^n) / (1 - q^{kn}).
Series master_numerator(int k, int order);

/// master_numerator(k) / (q;q)_inf.
Series build_master_lhs(int k, int order);

/// Calls build(order + margin), growing the margin until the result is valid
/// to `order`, then truncates. Needed whenever a Laurent prefactor eats into
/// the validity bound.
Series build_to_order(int order, const std::function<Series(int)>& build);

}  // namespace qseries
