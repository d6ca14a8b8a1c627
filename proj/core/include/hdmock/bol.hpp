#pragma once

#include "hdmock/analytic.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/qseries.hpp"

namespace hdmock {

/// D^{k+1} with D = q d/dq: the coefficient of q^n is multiplied by n^{k+1}.
/// Maps weight -k (weakly holomorphic) forms to weight k + 2.
QSeries bol_operator(const QSeries& f, int k);

/// Finite-pole-order model of M^!_{k+2} / D^{k+1} M^!_{-k}.
struct BolQuotientReport {
  int k = 0;
  int p = 0;
  int prec = 0;
  int dim_source = 0;  // dim of the weight -k space with pole order <= p
  int dim_target = 0;  // dim of the weight k+2 space with pole order <= p
  int dim_image = 0;
  int quotient_dim = 0;
};

/// Minimum precision used by bol_quotient_dim: 12p + k + 20.
int bol_default_precision(int k, int p);

/// Pushes the echelon basis of Delta^{-p} M_{12p-k} through D^{k+1}, reduces
/// every image in Delta^{-p} M_{12p+k+2}, and ranks the coordinates exactly.
/// Throws hdmock::Error if an image fails to reduce to zero.
BolQuotientReport bol_quotient_dim(int k, int p, int prec = 0);

/// |(D^{k+1} f)(g tau) - (c tau + d)^{k+2} (D^{k+1} f)(tau)| with f truncated
/// to `prec` coefficients.
Residual bol_equivariance_residual(const QSeries& f, int k, const GammaMatrix& g,
                                   const HPoint& tau, int prec);

}  // namespace hdmock
