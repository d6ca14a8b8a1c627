#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hdmock/linalg.hpp"

namespace hdmock {

/// An element [[a, b], [c, d]] of SL2(Z).
class GammaMatrix {
 public:
  GammaMatrix() = default;
  /// Throws hdmock::Error unless ad - bc = 1.
  GammaMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GammaMatrix identity() { return {}; }
  static GammaMatrix S() { return {0, -1, 1, 0}; }
  static GammaMatrix T() { return {1, 1, 0, 1}; }
  /// U = ST, of order 3 in PSL2(Z).
  static GammaMatrix U() { return S() * T(); }

  /// Parses "S", "T", "U", "I", a word such as "STS", or "a,b,c,d".
  static GammaMatrix parse(const std::string& text);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  /// Mobius action on the upper half plane.
  std::complex<double> act(std::complex<double> tau) const;
  /// Automorphy factor c tau + d.
  std::complex<double> automorphy(std::complex<double> tau) const;

  friend GammaMatrix operator*(const GammaMatrix& x, const GammaMatrix& y);
  friend bool operator==(const GammaMatrix&, const GammaMatrix&) = default;

 private:
  std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// Homogeneous polynomial of degree k in X, Y; coeffs[j] multiplies X^j Y^(k-j).
/// Setting Y = 1 gives the usual one-variable picture.
struct RepElement {
  int degree = 0;
  QVector coeffs;

  RepElement() : coeffs(1) {}
  RepElement(int k, QVector c);
  static RepElement zero(int k);
  /// X^j Y^(k-j).
  static RepElement basis(int k, int j);

  friend RepElement operator+(const RepElement& p, const RepElement& q);
  friend RepElement operator-(const RepElement& p, const RepElement& q);
  friend bool operator==(const RepElement&, const RepElement&) = default;
  bool is_zero() const;
};

/// Right action (P|g)(X, Y) = P(aX + bY, cX + dY), generic over the coefficient
/// ring. Dehomogenized this is (cX + d)^k P((aX + b)/(cX + d)).
template <typename T>
std::vector<T> slash_coefficients(std::span<const T> p, const GammaMatrix& g) {
  const std::size_t k = p.empty() ? 0 : p.size() - 1;
  auto linear_power = [](const T& x_coeff, const T& y_coeff, std::size_t n) {
    // Coefficients (in X^j Y^(n-j)) of (x_coeff X + y_coeff Y)^n.
    std::vector<T> out(n + 1, T(0));
    out[0] = T(1);
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<T> next(n + 1, T(0));
      for (std::size_t j = 0; j <= m; ++j) {
        next[j] += out[j] * y_coeff;
        next[j + 1] += out[j] * x_coeff;
      }
      out = std::move(next);
    }
    return out;
  };
  const T a(static_cast<long>(g.a())), b(static_cast<long>(g.b()));
  const T c(static_cast<long>(g.c())), d(static_cast<long>(g.d()));
  std::vector<T> result(k + 1, T(0));
  for (std::size_t j = 0; j <= k; ++j) {
    if (p[j] == T(0)) continue;
    const auto first = linear_power(a, b, j);
    const auto second = linear_power(c, d, k - j);
    for (std::size_t s = 0; s < first.size(); ++s) {
      if (first[s] == T(0)) continue;
      for (std::size_t t = 0; t < second.size(); ++t) result[s + t] += p[j] * first[s] * second[t];
    }
  }
  return result;
}

RepElement slash_rep(const RepElement& p, const GammaMatrix& g);

/// Matrix of P -> P|g on V^k in the monomial basis (column j is the image of X^j Y^(k-j)).
QMatrix slash_matrix(int k, const GammaMatrix& g);

/// Values of a 1-cocycle on the generators S and U = ST of PSL2(Z), with the
/// convention z(gh) = z(g)|h + z(h).
struct Cocycle {
  int degree = 0;
  RepElement ps;
  RepElement pu;

  /// P_S|(1 + S) == 0 and P_U|(1 + U + U^2) == 0.
  bool satisfies_relations() const;
};

/// The coboundary g -> P|g - P.
Cocycle coboundary(const RepElement& p);

/// dim V^k fixed by S and T.
int h0_dim(int k);

/// dim H^1(SL2(Z), V^k) as dim Z^1 - dim B^1 from exact ranks; 0 for odd k.
int h1_dim(int k);

/// Explicit model of H^1(V^k) inside the cocycle space V^k + V^k, where a
/// cocycle is flattened as (P_S coefficients, P_U coefficients).
struct H1Presentation {
  int degree = 0;
  std::vector<QVector> cocycles;       // basis of Z^1
  std::vector<QVector> coboundaries;   // basis of B^1
  std::vector<QVector> representatives;  // completes B^1 to a basis of Z^1

  std::size_t dim() const { return representatives.size(); }
};

H1Presentation h1_presentation(int k);

/// Flattens a cocycle as (P_S, P_U).
QVector flatten(const Cocycle& z);

/// dim of the S,T-invariants of (sum of V^l over `summands`) / (sum over `drop`).
/// `drop` must be a sub-multiset of `summands`.
int quotient_invariants_dim(const std::vector<int>& summands, const std::vector<int>& drop);

}  // namespace hdmock
