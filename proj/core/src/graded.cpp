#include "hdmock/graded.hpp"

#include <algorithm>
#include <numeric>

#include "hdmock/error.hpp"
#include "hdmock/modular_forms.hpp"

namespace hdmock {

std::string Variant::name() const {
  const std::string base = shadow == ShadowKind::analytic ? "analytic" : (pole_bound > 0 ? "weak" : "holomorphic");
  if (pole_bound > 0) return base + "(" + std::to_string(pole_bound) + ")";
  return base;
}

Variant Variant::parse(const std::string& name, int pole_bound) {
  if (pole_bound < 0) throw Error("pole bound must be nonnegative");
  if (name == "holomorphic" || name == "full") return {ShadowKind::full, pole_bound};
  if (name == "weak") return {ShadowKind::full, std::max(pole_bound, 1)};
  if (name == "analytic") return {ShadowKind::analytic, pole_bound};
  throw Error("unknown variant \"" + name + "\" (expected holomorphic, weak or analytic)");
}

int h1_mult(int l, ShadowKind kind) {
  if (l < 1) throw Error("shadow weight must be positive");
  if (l % 2 != 0) return 0;
  if (kind == ShadowKind::analytic) return dim_S(l + 2);
  return dim_M(l + 2) + dim_S(l + 2);
}

std::int64_t base_dimension(int k, const Variant& variant) {
  return dim_M(k + 12 * variant.pole_bound);
}

namespace {

// counts[d][w]: number of multisets of d slots whose weights sum to w.
std::vector<std::vector<std::int64_t>> slot_multiset_counts(int depth, ShadowKind kind, int cutoff) {
  std::vector<std::vector<std::int64_t>> counts(
      static_cast<std::size_t>(depth + 1),
      std::vector<std::int64_t>(static_cast<std::size_t>(depth * cutoff + 1), 0));
  counts[0][0] = 1;
  for (int l = 1; l <= cutoff; ++l) {
    const int mult = h1_mult(l, kind);
    for (int c = 0; c < mult; ++c) {
      // Ascending depth reuses the slot: unbounded multiplicity.
      for (int d = 1; d <= depth; ++d) {
        auto& row = counts[static_cast<std::size_t>(d)];
        const auto& prev = counts[static_cast<std::size_t>(d - 1)];
        for (int w = l; w <= depth * cutoff; ++w) {
          row[static_cast<std::size_t>(w)] += prev[static_cast<std::size_t>(w - l)];
        }
      }
    }
  }
  return counts;
}

void check_table_args(int depth, int cutoff) {
  if (cutoff < 2) throw Error("shadow weight cutoff must be >= 2");
  if (depth < 0) throw Error("depth must be nonnegative");
}

}  // namespace

std::int64_t gr_dimension(int k, int depth, const Variant& variant, int cutoff) {
  check_table_args(depth, cutoff);
  const auto counts = slot_multiset_counts(depth, variant.shadow, cutoff);
  std::int64_t total = 0;
  const auto& row = counts[static_cast<std::size_t>(depth)];
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] != 0) total += row[w] * base_dimension(k + static_cast<int>(w), variant);
  }
  return total;
}

std::int64_t filtered_dimension(int k, int depth, const Variant& variant, int cutoff) {
  std::int64_t total = 0;
  for (int j = 0; j <= depth; ++j) total += gr_dimension(k, j, variant, cutoff);
  return total;
}

std::int64_t GrDims::at(int k, int depth) const {
  if (k < kmin || k > kmax || depth < 0 || depth > max_depth) throw Error("entry outside table");
  return table[static_cast<std::size_t>((k - kmin) * (max_depth + 1) + depth)];
}

GrDims gr_dims(const Variant& variant, int cutoff, int kmin, int kmax, int max_depth) {
  check_table_args(max_depth, cutoff);
  if (kmax < kmin) throw Error("kmax must be >= kmin");
  const auto counts = slot_multiset_counts(max_depth, variant.shadow, cutoff);
  GrDims out{variant, cutoff, kmin, kmax, max_depth, {}};
  out.table.reserve(static_cast<std::size_t>((kmax - kmin + 1) * (max_depth + 1)));
  for (int k = kmin; k <= kmax; ++k) {
    for (int d = 0; d <= max_depth; ++d) {
      std::int64_t total = 0;
      const auto& row = counts[static_cast<std::size_t>(d)];
      for (std::size_t w = 0; w < row.size(); ++w) {
        if (row[w] != 0) total += row[w] * base_dimension(k + static_cast<int>(w), variant);
      }
      out.table.push_back(total);
    }
  }
  return out;
}

int GrBasisLabel::base_weight() const {
  return std::accumulate(slots.begin(), slots.end(), weight,
                         [](int acc, const ShadowSlot& s) { return acc + s.l; });
}

GrBasisLabel make_label(int base_weight, std::vector<ShadowSlot> slots, int base_index,
                        int pole_bound) {
  std::sort(slots.begin(), slots.end());
  int shift = 0;
  for (const auto& s : slots) shift += s.l;
  return {base_weight - shift, std::move(slots), pole_bound, base_index};
}

GrCombination single(const GrBasisLabel& label, const QRational& coeff) {
  GrCombination c;
  if (coeff != 0) c.emplace(label, coeff);
  return c;
}

GradedModel::GradedModel(Variant variant, int cutoff) : variant_(variant), cutoff_(cutoff) {
  if (cutoff < 2) throw Error("shadow weight cutoff must be >= 2");
}

void GradedModel::validate(const GrBasisLabel& label) const {
  if (!std::is_sorted(label.slots.begin(), label.slots.end())) throw Error("slots must be sorted");
  for (const auto& s : label.slots) {
    if (s.l < 1 || s.l > cutoff_) {
      throw Error("slot weight " + std::to_string(s.l) + " outside 1.." + std::to_string(cutoff_));
    }
    if (s.index < 0 || s.index >= h1_mult(s.l, variant_.shadow)) {
      throw Error("slot index " + std::to_string(s.index) + " out of range for H^1(V^" +
                  std::to_string(s.l) + ")");
    }
  }
  if (label.pole_bound < 0) throw Error("pole bound must be nonnegative");
  const int dim = dim_M(label.base_weight() + 12 * label.pole_bound);
  if (label.base_index < 0 || label.base_index >= dim) {
    throw Error("base index " + std::to_string(label.base_index) + " out of range for weight " +
                std::to_string(label.base_weight()));
  }
}

std::vector<GrBasisLabel> GradedModel::basis_labels(int k, int depth) const {
  std::vector<ShadowSlot> all;
  for (int l = 1; l <= cutoff_; ++l)
    for (int c = 0; c < h1_mult(l, variant_.shadow); ++c) all.push_back({l, c});
  std::vector<GrBasisLabel> out;
  std::vector<ShadowSlot> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == depth) {
      int shift = 0;
      for (const auto& s : chosen) shift += s.l;
      const int dim = dim_M(k + shift + 12 * variant_.pole_bound);
      for (int b = 0; b < dim; ++b) out.push_back({k, chosen, variant_.pole_bound, b});
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      chosen.push_back(all[i]);
      self(self, i);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

void add_into(GrCombination& acc, const GrBasisLabel& label, const QRational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.emplace(label, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void add_into(ShadowCombination& acc, const ShadowTerm& term, const QRational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.emplace(term, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

// Product of two base basis forms, expanded in the basis of the product weight.
QVector base_product(const GrBasisLabel& a, const GrBasisLabel& b) {
  const int wa = a.base_weight(), wb = b.base_weight();
  const int pt = a.pole_bound + b.pole_bound;
  const int target_prec = default_precision(wa + wb, pt);
  const int factor_prec = target_prec + pt + 2;
  const FormSpace sa = basis_space(wa, a.pole_bound, factor_prec);
  const FormSpace sb = basis_space(wb, b.pole_bound, factor_prec);
  const FormSpace target = basis_space(wa + wb, pt, target_prec);
  const QSeries prod =
      sa.basis.at(static_cast<std::size_t>(a.base_index)) * sb.basis.at(static_cast<std::size_t>(b.base_index));
  if (prod.prec() < target.prec) throw Error("precision exhausted while multiplying base forms");
  const Reduction red = reduce_in_space(prod, target);
  if (!red.in_span()) throw Error("precision exhausted while multiplying base forms");
  return red.coordinates;
}

}  // namespace

GrCombination GradedModel::product(const GrCombination& a, const GrCombination& b) const {
  GrCombination out;
  for (const auto& [la, ca] : a) {
    validate(la);
    for (const auto& [lb, cb] : b) {
      validate(lb);
      std::vector<ShadowSlot> slots = la.slots;
      slots.insert(slots.end(), lb.slots.begin(), lb.slots.end());
      std::sort(slots.begin(), slots.end());
      const QVector coords = base_product(la, lb);
      const QRational cc = ca * cb;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        GrBasisLabel l{la.weight + lb.weight, slots, la.pole_bound + lb.pole_bound, static_cast<int>(i)};
        add_into(out, l, cc * coords[i]);
      }
    }
  }
  return out;
}

ShadowCombination GradedModel::product(const ShadowCombination& a, const GrCombination& b) const {
  ShadowCombination out;
  for (const auto& [term, ca] : a) {
    const GrCombination prod = product(single(term.rest, ca), b);
    for (const auto& [label, c] : prod) add_into(out, ShadowTerm{term.slot, label}, c);
  }
  return out;
}

ShadowCombination GradedModel::shadow(const GrCombination& a) const {
  ShadowCombination out;
  for (const auto& [label, c] : a) {
    validate(label);
    if (label.depth() == 0) throw Error("no shadow: depth 0 element");
    for (std::size_t i = 0; i < label.slots.size(); ++i) {
      if (i > 0 && label.slots[i] == label.slots[i - 1]) continue;
      const ShadowSlot s = label.slots[i];
      const auto mult = std::count(label.slots.begin(), label.slots.end(), s);
      GrBasisLabel rest = label;
      rest.slots.erase(rest.slots.begin() + static_cast<std::ptrdiff_t>(i));
      rest.weight = label.weight + s.l;
      add_into(out, ShadowTerm{s, rest}, c * static_cast<long>(mult));
    }
  }
  return out;
}

ShadowCombination operator+(const ShadowCombination& a, const ShadowCombination& b) {
  ShadowCombination out = a;
  for (const auto& [t, c] : b) add_into(out, t, c);
  return out;
}

bool is_pure(const GrCombination& a, int k) {
  for (const auto& [label, c] : a) {
    for (const auto& s : label.slots) {
      if (s.l != -k) return false;
    }
  }
  return true;
}

}  // namespace hdmock
