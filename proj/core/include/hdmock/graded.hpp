#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdmock/rational.hpp"

namespace hdmock {

/// Which part of H^1(V^l) a shadow slot may occupy: the whole Eichler-Shimura
/// space M_{l+2} + conj(S_{l+2}), or only the anti-holomorphic cuspidal part.
enum class ShadowKind { full, analytic };

/// Table variant: shadow kind plus the pole bound of the base ring
/// (0 = holomorphic M_*, p > 0 = weakly holomorphic with pole order <= p).
struct Variant {
  ShadowKind shadow = ShadowKind::full;
  int pole_bound = 0;

  static Variant holomorphic() { return {ShadowKind::full, 0}; }
  static Variant weak(int p) { return {ShadowKind::full, p}; }
  static Variant analytic(int p = 0) { return {ShadowKind::analytic, p}; }

  /// "holomorphic", "weak(p)", "analytic" or "analytic(p)".
  std::string name() const;
  /// Accepts "holomorphic" | "full", "weak", "analytic"; pole bound given separately.
  static Variant parse(const std::string& name, int pole_bound);

  friend bool operator==(const Variant&, const Variant&) = default;
};

/// Multiplicity of weight -l classes: dim M_{l+2} + dim S_{l+2} (full) or
/// dim S_{l+2} (analytic) for even l >= 1, zero for odd l.
int h1_mult(int l, ShadowKind kind);

/// Dimension of the base piece of weight k: dim M_{k + 12p}.
std::int64_t base_dimension(int k, const Variant& variant);

/// Weight-k, depth-i piece of M_* (x) Sym^i(sum_{0<l<=cutoff} H^1(V^l)), where a
/// class in H^1(V^l) carries weight -l.
std::int64_t gr_dimension(int k, int depth, const Variant& variant, int cutoff);

/// sum_{j <= depth} gr_dimension(k, j, ...): the depth-filtered piece.
std::int64_t filtered_dimension(int k, int depth, const Variant& variant, int cutoff);

struct GrDims {
  Variant variant;
  int cutoff = 0;
  int kmin = 0;
  int kmax = 0;
  int max_depth = 0;
  std::vector<std::int64_t> table;  // row-major over (weight, depth)

  std::int64_t at(int k, int depth) const;
};

/// Table for kmin <= k <= kmax and 0 <= depth <= max_depth.
GrDims gr_dims(const Variant& variant, int cutoff, int kmin, int kmax, int max_depth);

struct ShadowSlot {
  int l = 0;      // H^1(V^l)
  int index = 0;  // basis vector of H^1(V^l)
  auto operator<=>(const ShadowSlot&) const = default;
};

/// Basis vector of the associated graded algebra: a multiset of shadow slots
/// times a base form from the echelon basis of Delta^{-p} M_{k'+12p}, where
/// k' = weight + sum of slot weights.
struct GrBasisLabel {
  int weight = 0;
  std::vector<ShadowSlot> slots;  // sorted
  int pole_bound = 0;
  int base_index = 0;

  int depth() const { return static_cast<int>(slots.size()); }
  int base_weight() const;
  auto operator<=>(const GrBasisLabel&) const = default;
};

using GrCombination = std::map<GrBasisLabel, QRational>;

/// A slot tensored with a label one depth lower.
struct ShadowTerm {
  ShadowSlot slot;
  GrBasisLabel rest;
  auto operator<=>(const ShadowTerm&) const = default;
};

using ShadowCombination = std::map<ShadowTerm, QRational>;

/// Builds a label with weight computed from the base weight and slots.
GrBasisLabel make_label(int base_weight, std::vector<ShadowSlot> slots, int base_index,
                        int pole_bound = 0);

GrCombination single(const GrBasisLabel& label, const QRational& coeff = 1);

/// Formal model of Gr_F at a fixed variant and shadow-weight cutoff.
class GradedModel {
 public:
  GradedModel(Variant variant, int cutoff);

  const Variant& variant() const { return variant_; }
  int cutoff() const { return cutoff_; }

  /// Throws hdmock::Error if a slot or base index is out of range.
  void validate(const GrBasisLabel& label) const;

  /// Every basis label of weight k and the given depth.
  std::vector<GrBasisLabel> basis_labels(int k, int depth) const;

  /// Bilinear product: slot multisets unite, base forms multiply and are
  /// re-expanded in the echelon basis of the product weight.
  GrCombination product(const GrCombination& a, const GrCombination& b) const;
  /// (s (x) x) * b = s (x) (x * b).
  ShadowCombination product(const ShadowCombination& a, const GrCombination& b) const;

  /// Removes one slot in every way, weighted by its multiplicity.
  /// Throws hdmock::Error("no shadow") on depth 0 input.
  ShadowCombination shadow(const GrCombination& a) const;

 private:
  Variant variant_;
  int cutoff_;
};

ShadowCombination operator+(const ShadowCombination& a, const ShadowCombination& b);

/// True iff every slot of every term has l == -k (vacuous at depth 0).
bool is_pure(const GrCombination& a, int k);

}  // namespace hdmock
