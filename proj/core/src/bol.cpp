#include "hdmock/bol.hpp"

#include <algorithm>
#include <string>

#include "hdmock/error.hpp"
#include "hdmock/linalg.hpp"
#include "hdmock/modular_forms.hpp"

namespace hdmock {

QSeries bol_operator(const QSeries& f, int k) {
  if (k < 0) throw Error("Bol operator needs k >= 0");
  std::vector<QRational> c(f.coeffs().begin(), f.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long n = f.valuation() + static_cast<long>(i);
    QInteger npow;
    mpz_set_si(npow.get_mpz_t(), n);
    mpz_pow_ui(npow.get_mpz_t(), npow.get_mpz_t(), static_cast<unsigned long>(k + 1));
    c[i] *= npow;
  }
  return QSeries(f.valuation(), f.prec(), std::move(c));
}

int bol_default_precision(int k, int p) { return 12 * p + k + 20; }

BolQuotientReport bol_quotient_dim(int k, int p, int prec) {
  if (k < 2 || k % 2 != 0) throw Error("Bol quotient needs even k >= 2, got " + std::to_string(k));
  if (p < 1) throw Error("Bol quotient needs pole bound p >= 1");
  prec = std::max(prec, bol_default_precision(k, p));
  const FormSpace source = basis_space(-k, p, prec);
  const FormSpace target = basis_space(k + 2, p, prec);

  BolQuotientReport rep;
  rep.k = k;
  rep.p = p;
  rep.prec = prec;
  rep.dim_source = static_cast<int>(source.dim());
  rep.dim_target = static_cast<int>(target.dim());

  std::vector<QVector> images;
  for (const auto& f : source.basis) {
    const Reduction red = reduce_in_space(bol_operator(f, k), target);
    if (!red.in_span()) {
      throw Error("internal consistency error: D^" + std::to_string(k + 1) +
                  " image left the weight " + std::to_string(k + 2) + " space");
    }
    images.push_back(red.coordinates);
  }
  rep.dim_image =
      images.empty() ? 0 : static_cast<int>(rank(QMatrix::from_rows(images, target.dim())));
  rep.quotient_dim = rep.dim_target - rep.dim_image;
  return rep;
}

Residual bol_equivariance_residual(const QSeries& f, int k, const GammaMatrix& g,
                                   const HPoint& tau, int prec) {
  return modular_residual(bol_operator(f.truncated(prec), k), k + 2, g, tau);
}

}  // namespace hdmock
