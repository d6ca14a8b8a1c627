#pragma once

#include <vector>

#include "hdmock/linalg.hpp"
#include "hdmock/qseries.hpp"

namespace hdmock {

/// Bernoulli number B_n (B_1 = -1/2), exact.
QRational bernoulli(int n);

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, known to q^(prec-1). k even, k >= 2.
QSeries eisenstein(int k, int prec);
/// Delta = (E4^3 - E6^2)/1728.
QSeries delta(int prec);
/// j = E4^3 / Delta, with the requested absolute precision.
QSeries j_invariant(int prec);

/// Level one dimension formulas. Zero for odd or negative weight.
int dim_M(int k);
int dim_S(int k);

/// A finite-precision model of M_k (pole_bound == 0) or of the weakly
/// holomorphic forms of weight k with pole order at most pole_bound, i.e.
/// Delta^{-p} M_{k+12p}. The basis is in reduced echelon form: strictly
/// increasing leading exponents, each leading coefficient 1, and every basis
/// element vanishes at the other elements' leading exponents.
struct FormSpace {
  int weight = 0;
  int pole_bound = 0;
  int prec = 0;
  std::vector<QSeries> basis;

  std::size_t dim() const { return basis.size(); }
  std::vector<int> leading_exponents() const;
};

/// Default precision: pole bound + dimension + 10 guard coefficients.
int default_precision(int k, int pole_bound);

/// Echelon basis of Delta^{-p} M_{k+12p} to precision prec (0 = default).
/// Throws hdmock::Error when prec <= p + dim M_{k+12p}.
FormSpace basis_space(int k, int pole_bound, int prec = 0);

struct Reduction {
  QVector coordinates;
  QSeries remainder;

  bool in_span() const { return remainder.is_zero(); }
};

/// Subtracts basis multiples from f (truncated to the space's precision) to
/// clear every leading exponent. f lies in the span iff the remainder is zero.
Reduction reduce_in_space(const QSeries& f, const FormSpace& space);

/// sum_i coords[i] * basis[i].
QSeries combine(const FormSpace& space, const QVector& coords);

}  // namespace hdmock
