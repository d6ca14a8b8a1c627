#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hdmock/rational.hpp"

namespace hdmock {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// Coefficients are known for exponents valuation()..prec()-1 and stored
/// densely. Nothing is claimed about exponents >= prec(). Exponents below the
/// valuation are exactly zero. The stored valuation is not normalized: a series
/// may begin with explicit zero coefficients (see leading_exponent()).
class QSeries {
 public:
  /// The zero series known up to (but excluding) q^prec.
  explicit QSeries(int prec = 1, int valuation = 0);
  QSeries(int valuation, int prec, std::vector<QRational> coeffs);

  static QSeries monomial(int exponent, const QRational& c, int prec);
  static QSeries constant(const QRational& c, int prec);

  int valuation() const { return valuation_; }
  int prec() const { return prec_; }
  std::span<const QRational> coeffs() const { return coeffs_; }

  /// Coefficient of q^n. Zero below the valuation; throws for n >= prec().
  const QRational& coeff(int n) const;

  /// Exponent of the first nonzero coefficient, if any coefficient is nonzero.
  std::optional<int> leading_exponent() const;
  /// Lowest exponent that is not provably zero (prec() for the zero series).
  int effective_valuation() const;
  bool is_zero() const { return !leading_exponent().has_value(); }

  QSeries truncated(int prec) const;
  /// Drops leading zero coefficients.
  QSeries normalized() const;
  /// Re-expresses with a smaller stored valuation, padding with zeros.
  QSeries with_valuation(int valuation) const;

  QSeries operator-() const;
  QSeries& operator*=(const QRational& c);

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QRational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(QSeries a, const QRational& c) { return a *= c; }

  /// Structural equality: same valuation, precision and coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  int valuation_ = 0;
  int prec_ = 1;
  std::vector<QRational> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
/// D = q d/dq.
QSeries series_Dq(const QSeries& a);
/// Multiplicative inverse; throws hdmock::Error("not invertible at this
/// precision") when every known coefficient is zero.
QSeries series_invert(const QSeries& a);
/// a^n for any integer n (negative powers go through series_invert).
QSeries series_pow(const QSeries& a, int n);

/// True when a and b agree on every exponent both of them know.
bool agree_within_precision(const QSeries& a, const QSeries& b);

}  // namespace hdmock
