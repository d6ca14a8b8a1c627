#include "hdmock/gamma.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hdmock/error.hpp"

namespace hdmock {

GammaMatrix::GammaMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) throw Error("matrix is not in SL2(Z): ad - bc != 1");
}

GammaMatrix GammaMatrix::parse(const std::string& text) {
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    std::vector<std::int64_t> v;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(std::stoll(item));
      } catch (const std::exception&) {
        throw Error("malformed matrix entry \"" + item + "\"");
      }
    }
    if (v.size() != 4) throw Error("matrix needs four entries a,b,c,d");
    return {v[0], v[1], v[2], v[3]};
  }
  GammaMatrix g;
  for (char ch : text) {
    switch (ch) {
      case 'S': g = g * S(); break;
      case 'T': g = g * T(); break;
      case 'U': g = g * U(); break;
      case 'I': break;
      default: throw Error(std::string("unknown generator '") + ch + "'");
    }
  }
  return g;
}

std::complex<double> GammaMatrix::act(std::complex<double> tau) const {
  return (static_cast<double>(a_) * tau + static_cast<double>(b_)) / automorphy(tau);
}

std::complex<double> GammaMatrix::automorphy(std::complex<double> tau) const {
  return static_cast<double>(c_) * tau + static_cast<double>(d_);
}

GammaMatrix operator*(const GammaMatrix& x, const GammaMatrix& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

RepElement::RepElement(int k, QVector c) : degree(k), coeffs(std::move(c)) {
  if (k < 0) throw Error("degree must be nonnegative");
  if (coeffs.size() != static_cast<std::size_t>(k + 1)) {
    throw Error("degree " + std::to_string(k) + " polynomial needs " + std::to_string(k + 1) +
                " coefficients");
  }
  for (auto& x : coeffs) x.canonicalize();
}

RepElement RepElement::zero(int k) { return RepElement(k, QVector(static_cast<std::size_t>(k + 1))); }

RepElement RepElement::basis(int k, int j) {
  RepElement p = zero(k);
  p.coeffs.at(static_cast<std::size_t>(j)) = 1;
  return p;
}

RepElement operator+(const RepElement& p, const RepElement& q) {
  if (p.degree != q.degree) throw Error("degree mismatch");
  RepElement r = p;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += q.coeffs[i];
  return r;
}

RepElement operator-(const RepElement& p, const RepElement& q) {
  if (p.degree != q.degree) throw Error("degree mismatch");
  RepElement r = p;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= q.coeffs[i];
  return r;
}

bool RepElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const QRational& x) { return x == 0; });
}

RepElement slash_rep(const RepElement& p, const GammaMatrix& g) {
  return RepElement(p.degree, slash_coefficients<QRational>(p.coeffs, g));
}

QMatrix slash_matrix(int k, const GammaMatrix& g) {
  const auto n = static_cast<std::size_t>(k + 1);
  QMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RepElement img = slash_rep(RepElement::basis(k, static_cast<int>(j)), g);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img.coeffs[i];
  }
  return m;
}

namespace {

struct RelationOperators {
  QMatrix one_plus_s;        // 1 + S
  QMatrix one_plus_u_u2;     // 1 + U + U^2
  QMatrix s_minus_one;       // S - 1
  QMatrix u_minus_one;       // U - 1
};

RelationOperators relation_operators(int k) {
  const auto n = static_cast<std::size_t>(k + 1);
  const QMatrix id = QMatrix::identity(n);
  const QMatrix s = slash_matrix(k, GammaMatrix::S());
  const QMatrix u = slash_matrix(k, GammaMatrix::U());
  // Right action: P|U|U has matrix u*u as well since column images compose.
  const QMatrix u2 = slash_matrix(k, GammaMatrix::U() * GammaMatrix::U());
  return {id + s, id + u + u2, s - id, u - id};
}

// Block-diagonal placement of two square blocks.
QMatrix block_diag(const QMatrix& x, const QMatrix& y) {
  QMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
  return m;
}

}  // namespace

bool Cocycle::satisfies_relations() const {
  const auto ops = relation_operators(degree);
  const QVector a = ops.one_plus_s * ps.coeffs;
  const QVector b = ops.one_plus_u_u2 * pu.coeffs;
  auto zero = [](const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const QRational& x) { return x == 0; });
  };
  return zero(a) && zero(b);
}

Cocycle coboundary(const RepElement& p) {
  return {p.degree, slash_rep(p, GammaMatrix::S()) - p, slash_rep(p, GammaMatrix::U()) - p};
}

int h0_dim(int k) {
  if (k < 0) throw Error("degree must be nonnegative");
  const auto n = static_cast<std::size_t>(k + 1);
  const QMatrix id = QMatrix::identity(n);
  const QMatrix stacked =
      (slash_matrix(k, GammaMatrix::S()) - id).stacked(slash_matrix(k, GammaMatrix::T()) - id);
  return static_cast<int>(n - rank(stacked));
}

int h1_dim(int k) {
  if (k < 0) throw Error("degree must be nonnegative");
  if (k % 2 != 0) return 0;  // -I acts by -1
  const auto n = static_cast<std::size_t>(k + 1);
  const auto ops = relation_operators(k);
  const std::size_t dim_z = (n - rank(ops.one_plus_s)) + (n - rank(ops.one_plus_u_u2));
  const std::size_t dim_b = rank(ops.s_minus_one.stacked(ops.u_minus_one));
  return static_cast<int>(dim_z - dim_b);
}

QVector flatten(const Cocycle& z) {
  QVector v = z.ps.coeffs;
  v.insert(v.end(), z.pu.coeffs.begin(), z.pu.coeffs.end());
  return v;
}

H1Presentation h1_presentation(int k) {
  if (k < 0) throw Error("degree must be nonnegative");
  H1Presentation out;
  out.degree = k;
  if (k % 2 != 0) return out;
  const auto n = static_cast<std::size_t>(k + 1);
  const auto ops = relation_operators(k);
  out.cocycles = nullspace(block_diag(ops.one_plus_s, ops.one_plus_u_u2));

  // B^1 is spanned by the coboundaries of the monomials.
  std::vector<QVector> spanning;
  for (std::size_t j = 0; j < n; ++j) {
    spanning.push_back(flatten(coboundary(RepElement::basis(k, static_cast<int>(j)))));
  }
  std::vector<QVector> chosen;
  auto current_rank = [&](const std::vector<QVector>& vs) {
    return vs.empty() ? std::size_t{0} : rank(QMatrix::from_rows(vs, 2 * n));
  };
  for (const auto& v : spanning) {
    auto trial = chosen;
    trial.push_back(v);
    if (current_rank(trial) > chosen.size()) chosen = std::move(trial);
  }
  out.coboundaries = chosen;
  for (const auto& z : out.cocycles) {
    auto trial = chosen;
    trial.push_back(z);
    if (current_rank(trial) > chosen.size()) {
      chosen = std::move(trial);
      out.representatives.push_back(z);
    }
  }
  return out;
}

int quotient_invariants_dim(const std::vector<int>& summands, const std::vector<int>& drop) {
  std::map<int, int> remaining;
  for (int l : summands) {
    if (l < 0) throw Error("representation degrees must be nonnegative");
    ++remaining[l];
  }
  for (int l : drop) {
    auto it = remaining.find(l);
    if (it == remaining.end() || it->second == 0) {
      throw Error("dropped summand V^" + std::to_string(l) + " is not among the summands");
    }
    --it->second;
  }
  // The quotient is the complementary partial sum. Assemble it as one block
  // diagonal representation and compute its joint fixed space directly.
  QMatrix s_block, t_block;
  for (const auto& [l, count] : remaining) {
    for (int c = 0; c < count; ++c) {
      const auto id = QMatrix::identity(static_cast<std::size_t>(l + 1));
      const QMatrix s = slash_matrix(l, GammaMatrix::S()) - id;
      const QMatrix t = slash_matrix(l, GammaMatrix::T()) - id;
      s_block = s_block.rows() == 0 ? s : block_diag(s_block, s);
      t_block = t_block.rows() == 0 ? t : block_diag(t_block, t);
    }
  }
  if (s_block.rows() == 0) return 0;
  return static_cast<int>(s_block.cols() - rank(s_block.stacked(t_block)));
}

}  // namespace hdmock
