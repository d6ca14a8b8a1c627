#include "hdmock/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <climits>
#include <string>

#include "hdmock/error.hpp"

namespace hdmock {

std::string to_string(const QRational& x) {
  QRational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

QRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error("malformed rational \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  QInteger num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = QInteger(s, 10);
    } else {
      num = QInteger(s.substr(0, slash), 10);
      den = QInteger(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw bad();
  }
  if (den == 0) throw Error("zero denominator in \"" + s + "\"");
  QRational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

long double mpz_to_long_double(const QInteger& z) {
  if (z == 0) return 0.0L;
  const long bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
  const long shift = std::max(0L, bits - 64);
  QInteger top = abs(z);
  mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  long double v = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
  v = std::ldexp(v, static_cast<int>(shift));
  return sgn(z) < 0 ? -v : v;
}

}  // namespace

long double to_long_double(const QRational& x) {
  const long nb = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  // Rescale so neither part overflows the long double exponent range.
  if (nb < 16000 && db < 16000) {
    return mpz_to_long_double(x.get_num()) / mpz_to_long_double(x.get_den());
  }
  const long shift = nb - db;
  QInteger num = x.get_num(), den = x.get_den();
  if (shift > 0) {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  QRational scaled(num, den);
  scaled.canonicalize();
  return std::ldexp(mpz_to_long_double(scaled.get_num()) / mpz_to_long_double(scaled.get_den()),
                    static_cast<int>(shift));
}

QSeries::QSeries(int prec, int valuation)
    : valuation_(valuation), prec_(prec), coeffs_(static_cast<std::size_t>(prec - valuation)) {
  if (prec <= valuation) throw Error("series precision must exceed its valuation");
}

QSeries::QSeries(int valuation, int prec, std::vector<QRational> coeffs)
    : valuation_(valuation), prec_(prec), coeffs_(std::move(coeffs)) {
  if (prec <= valuation) throw Error("series precision must exceed its valuation");
  if (coeffs_.size() != static_cast<std::size_t>(prec - valuation)) {
    throw Error("series has " + std::to_string(coeffs_.size()) + " coefficients, expected " +
                std::to_string(prec - valuation));
  }
  // mpq_class(num, den) does not reduce; keep every stored value canonical.
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::monomial(int exponent, const QRational& c, int prec) {
  QSeries s(prec, std::min(exponent, prec - 1));
  if (exponent < prec) {
    auto& slot = s.coeffs_[static_cast<std::size_t>(exponent - s.valuation_)];
    slot = c;
    slot.canonicalize();
  }
  return s;
}

QSeries QSeries::constant(const QRational& c, int prec) { return monomial(0, c, prec); }

const QRational& QSeries::coeff(int n) const {
  static const QRational kZero{0};
  if (n >= prec_) {
    throw Error("coefficient of q^" + std::to_string(n) + " is beyond precision " +
                std::to_string(prec_));
  }
  if (n < valuation_) return kZero;
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

std::optional<int> QSeries::leading_exponent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return valuation_ + static_cast<int>(i);
  }
  return std::nullopt;
}

int QSeries::effective_valuation() const { return leading_exponent().value_or(prec_); }

QSeries QSeries::truncated(int prec) const {
  if (prec >= prec_) return *this;
  if (prec <= valuation_) return QSeries(prec, prec - 1);
  return QSeries(valuation_, prec,
                 std::vector<QRational>(coeffs_.begin(), coeffs_.begin() + (prec - valuation_)));
}

QSeries QSeries::normalized() const {
  const int lead = leading_exponent().value_or(prec_ - 1);
  return QSeries(lead, prec_,
                 std::vector<QRational>(coeffs_.begin() + (lead - valuation_), coeffs_.end()));
}

QSeries QSeries::with_valuation(int valuation) const {
  if (valuation >= valuation_) return *this;
  std::vector<QRational> c(static_cast<std::size_t>(valuation_ - valuation));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QSeries(valuation, prec_, std::move(c));
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator*=(const QRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const int v = std::min(a.valuation_, b.valuation_);
  const int n = std::min(a.prec_, b.prec_);
  std::vector<QRational> c(static_cast<std::size_t>(n - v));
  for (int e = v; e < n; ++e) c[static_cast<std::size_t>(e - v)] = a.coeff(e) + b.coeff(e);
  return QSeries(v, n, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int va = a.effective_valuation();
  const int vb = b.effective_valuation();
  const int v = a.valuation_ + b.valuation_;
  const int n = std::min(a.prec_ + vb, b.prec_ + va);
  std::vector<QRational> c(static_cast<std::size_t>(n - v));
  // Only the provably nonzero windows contribute.
  for (int i = va; i < a.prec_; ++i) {
    const QRational& x = a.coeff(i);
    if (x == 0) continue;
    for (int j = vb; j < b.prec_ && i + j < n; ++j) {
      const QRational& y = b.coeff(j);
      if (y == 0) continue;
      c[static_cast<std::size_t>(i + j - v)] += x * y;
    }
  }
  return QSeries(v, n, std::move(c));
}

QSeries series_add(const QSeries& a, const QSeries& b) { return a + b; }

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries series_Dq(const QSeries& a) {
  std::vector<QRational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= a.valuation() + static_cast<int>(i);
  return QSeries(a.valuation(), a.prec(), std::move(c));
}

QSeries series_invert(const QSeries& a) {
  const auto lead = a.leading_exponent();
  if (!lead) throw Error("not invertible at this precision");
  const int e = *lead;
  const int rel = a.prec() - e;  // relative precision of the unit part
  std::vector<QRational> u(a.coeffs().begin() + (e - a.valuation()), a.coeffs().end());
  const QRational inv0 = 1 / u[0];
  std::vector<QRational> b(static_cast<std::size_t>(rel));
  b[0] = inv0;
  for (int n = 1; n < rel; ++n) {
    QRational acc = 0;
    for (int j = 1; j <= n; ++j) {
      if (u[static_cast<std::size_t>(j)] != 0) {
        acc += u[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
      }
    }
    b[static_cast<std::size_t>(n)] = -inv0 * acc;
  }
  return QSeries(-e, rel - e, std::move(b));
}

QSeries series_pow(const QSeries& a, int n) {
  if (n < 0) return series_pow(series_invert(a), -n);
  QSeries result = QSeries::constant(1, a.prec() + std::max(0, -a.valuation()) * n + 1);
  QSeries base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool agree_within_precision(const QSeries& a, const QSeries& b) {
  const int lo = std::min(a.valuation(), b.valuation());
  const int hi = std::min(a.prec(), b.prec());
  for (int e = lo; e < hi; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

}  // namespace hdmock
