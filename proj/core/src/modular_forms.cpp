#include "hdmock/modular_forms.hpp"

#include <string>

#include "hdmock/error.hpp"

namespace hdmock {

QRational bernoulli(int n) {
  if (n < 0) throw Error("Bernoulli index must be nonnegative");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  std::vector<QRational> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    QRational acc = 0;
    QInteger binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += binom * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

namespace {

void require_even_weight(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error("Eisenstein series need even weight >= 2, got " + std::to_string(k));
  }
}

// sigma_{r}(n) for n = 0..count-1 (index 0 unused).
std::vector<QInteger> divisor_sums(int r, int count) {
  std::vector<QInteger> sigma(static_cast<std::size_t>(std::max(count, 1)));
  for (int d = 1; d < count; ++d) {
    QInteger dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
    for (int m = d; m < count; m += d) sigma[static_cast<std::size_t>(m)] += dp;
  }
  return sigma;
}

}  // namespace

QSeries eisenstein(int k, int prec) {
  require_even_weight(k);
  if (prec < 1) throw Error("precision must be positive");
  const QRational factor = QRational(-2 * k) / bernoulli(k);
  const auto sigma = divisor_sums(k - 1, prec);
  std::vector<QRational> c(static_cast<std::size_t>(prec));
  c[0] = 1;
  for (int n = 1; n < prec; ++n) c[static_cast<std::size_t>(n)] = factor * sigma[static_cast<std::size_t>(n)];
  return QSeries(0, prec, std::move(c));
}

QSeries delta(int prec) {
  if (prec < 2) throw Error("delta needs precision >= 2");
  const QSeries e4 = eisenstein(4, prec);
  const QSeries e6 = eisenstein(6, prec);
  return (e4 * e4 * e4 - e6 * e6) * QRational(1, 1728);
}

QSeries j_invariant(int prec) {
  if (prec < 2) throw Error("j needs precision >= 2");
  // Delta has valuation 1, so its inverse loses two exponents of precision.
  const int work = prec + 2;
  const QSeries e4 = eisenstein(4, work);
  return (e4 * e4 * e4 * series_invert(delta(work))).truncated(prec);
}

int dim_M(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

int dim_S(int k) {
  if (k < 4) return 0;
  return std::max(dim_M(k) - 1, 0);
}

std::vector<int> FormSpace::leading_exponents() const {
  std::vector<int> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(*b.leading_exponent());
  return out;
}

int default_precision(int k, int pole_bound) {
  return pole_bound + dim_M(k + 12 * pole_bound) + 10;
}

FormSpace basis_space(int k, int pole_bound, int prec) {
  if (k % 2 != 0) throw Error("weight must be even, got " + std::to_string(k));
  if (pole_bound < 0) throw Error("pole bound must be nonnegative");
  const int wt = k + 12 * pole_bound;
  const int dim = dim_M(wt);
  if (prec == 0) prec = default_precision(k, pole_bound);
  if (prec <= pole_bound + dim) {
    throw Error("insufficient precision to echelonize: need prec > " +
                std::to_string(pole_bound + dim) + ", got " + std::to_string(prec));
  }
  FormSpace space{k, pole_bound, prec, {}};
  if (dim == 0) return space;

  // Delta^{-p} has relative precision (work - 1) and valuation -p.
  const int work = prec + pole_bound + 2;
  const QSeries e4 = eisenstein(4, work);
  const QSeries e6 = eisenstein(6, work);
  const QSeries d = delta(work);
  const QSeries dinv_p = series_pow(d, -pole_bound);

  // Delta^c E4^a E6^b with b in {0, 1}: one monomial per leading exponent c.
  std::vector<QSeries> rows;
  QSeries delta_c = QSeries::constant(1, work);
  for (int c = 0; 12 * c <= wt; ++c) {
    const int rest = wt - 12 * c;
    if (rest != 2) {
      const int b = (rest % 4 == 0) ? 0 : 1;
      const int a = (rest - 6 * b) / 4;
      QSeries m = delta_c * series_pow(e4, a);
      if (b) m = m * e6;
      rows.push_back((m * dinv_p).truncated(prec).with_valuation(-pole_bound));
    }
    delta_c = delta_c * d;
  }
  if (static_cast<int>(rows.size()) != dim) throw Error("internal: monomial count mismatch");
  for (const auto& r : rows) {
    if (r.prec() < prec) throw Error("internal: working precision too small");
  }

  // Rows already have distinct leading exponents c - p; normalize and clear
  // each pivot column from the other rows.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int e = *rows[i].leading_exponent();
    rows[i] *= 1 / QRational(rows[i].coeff(e));
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      const QRational f = rows[j].coeff(e);
      if (f != 0) rows[j] = rows[j] - rows[i] * f;
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int e = *rows[i].leading_exponent();
    for (std::size_t j = 0; j < i; ++j) {
      if (*rows[j].leading_exponent() >= e) throw Error("internal: echelon order violated");
    }
  }
  space.basis = std::move(rows);
  return space;
}

Reduction reduce_in_space(const QSeries& f, const FormSpace& space) {
  if (f.prec() < space.prec) {
    throw Error("series precision " + std::to_string(f.prec()) + " is below space precision " +
                std::to_string(space.prec));
  }
  QSeries rem = f.truncated(space.prec);
  QVector coords(space.basis.size());
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    const QSeries& b = space.basis[i];
    const int e = *b.leading_exponent();
    const QRational c = rem.coeff(e);
    coords[i] = c;
    if (c != 0) rem = rem - b * c;
  }
  return {std::move(coords), std::move(rem)};
}

QSeries combine(const FormSpace& space, const QVector& coords) {
  if (coords.size() != space.basis.size()) throw Error("coordinate count does not match basis");
  QSeries acc(space.prec, -space.pole_bound);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) acc = acc + space.basis[i] * coords[i];
  }
  return acc;
}

}  // namespace hdmock
