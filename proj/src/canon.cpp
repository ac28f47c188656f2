#include "pf/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace pf {

namespace {

constexpr int kMaxN = Graph::kMaxOrder;
constexpr int kMaxWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;
constexpr std::size_t kMaxAutomorphisms = 256;

using Labeling = std::array<std::int8_t, kMaxN>;
using Bits = std::array<std::uint64_t, kMaxWords>;

struct Partition {
  int count = 0;
  std::array<VertexSet, kMaxN> cell{};
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g)
      : adj_(g), n_(g.order()), words_(static_cast<int>((Graph::pair_count(n_) + 63) / 64)) {}

  CanonicalResult run() {
    Partition root;
    if (n_ > 0) {
      root.count = 1;
      root.cell[0] = adj_.all();
    }
    refine(root);
    search(root, 0);

    CanonicalResult out{Graph(n_), std::vector<int>(n_)};
    for (int v = 0; v < n_; ++v) out.labeling[v] = best_lab_[v];
    for (std::size_t k = 0; k < Graph::pair_count(n_); ++k)
      if ((best_bits_[k >> 6] >> (63 - (k & 63))) & 1u) out.canonical_graph.set_bit(k);
    return out;
  }

 private:
  // Splits every cell by neighbor counts into every other cell until the
  // partition is equitable. Parts are ordered by increasing count, which
  // makes the result commute with vertex relabeling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed && p.count < n_) {
      changed = false;
      for (int s = 0; s < p.count && p.count < n_; ++s) {
        const VertexSet splitter = p.cell[s];
        for (int x = 0; x < p.count; ++x) {
          VertexSet c = p.cell[x];
          if ((c & (c - 1)) == 0) continue;
          std::array<VertexSet, kMaxN> bucket{};
          int lo = kMaxN, hi = -1;
          for (VertexSet r = c; r; r &= r - 1) {
            int v = std::countr_zero(r);
            int k = std::popcount(adj_.row[v] & splitter);
            bucket[k] |= VertexSet{1} << v;
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          int parts = 0;
          std::array<VertexSet, kMaxN> split{};
          for (int k = lo; k <= hi; ++k)
            if (bucket[k]) split[parts++] = bucket[k];
          for (int y = p.count - 1; y > x; --y) p.cell[y + parts - 1] = p.cell[y];
          for (int i = 0; i < parts; ++i) p.cell[x + i] = split[i];
          p.count += parts - 1;
          x += parts - 1;
          changed = true;
        }
      }
    }
  }

  // Returns the depth the search should unwind to (depth itself = continue).
  int search(const Partition& p, int depth) {
    if (p.count == n_) return leaf(p, depth);

    int target = -1, best_size = kMaxN + 1;
    for (int i = 0; i < p.count; ++i) {
      int sz = std::popcount(p.cell[i]);
      if (sz > 1 && sz < best_size) {
        best_size = sz;
        target = i;
      }
    }
    const VertexSet cell = p.cell[target];
    VertexSet explored = 0;
    for (VertexSet r = cell; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (explored && in_orbit(v, explored, depth)) continue;
      explored |= VertexSet{1} << v;
      path_[depth] = static_cast<std::int8_t>(v);

      Partition q;
      q.count = p.count + 1;
      for (int i = 0; i < target; ++i) q.cell[i] = p.cell[i];
      q.cell[target] = VertexSet{1} << v;
      q.cell[target + 1] = cell & ~(VertexSet{1} << v);
      for (int i = target + 1; i < p.count; ++i) q.cell[i + 1] = p.cell[i];
      refine(q);

      int back = search(q, depth + 1);
      if (back < depth) return back;
    }
    return depth;
  }

  int leaf(const Partition& p, int depth) {
    Labeling lab{};
    std::array<int, kMaxN> inv{};
    for (int i = 0; i < n_; ++i) {
      int v = std::countr_zero(p.cell[i]);
      lab[v] = static_cast<std::int8_t>(i);
      inv[i] = v;
    }
    Bits bits{};
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      VertexSet rj = adj_.row[inv[j]];
      for (int i = 0; i < j; ++i, ++k)
        if ((rj >> inv[i]) & 1u) bits[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
    }

    if (!have_first_) {
      have_first_ = true;
      first_bits_ = best_bits_ = bits;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      return depth;
    }

    int unwind = depth;
    if (equal_bits(bits, first_bits_)) {
      record_automorphism(lab, first_lab_);
      unwind = std::min(unwind, common_depth(first_path_, depth));
    }
    auto cmp = compare_bits(bits, best_bits_);
    if (cmp == 0) {
      record_automorphism(lab, best_lab_);
      unwind = std::min(unwind, common_depth(best_path_, depth));
    } else if (cmp < 0) {
      best_bits_ = bits;
      best_lab_ = lab;
      best_path_ = path_;
    }
    return unwind;
  }

  int common_depth(const std::array<std::int8_t, kMaxN>& other, int depth) const {
    int d = 0;
    while (d < depth && other[d] == path_[d]) ++d;
    return d;
  }

  bool equal_bits(const Bits& a, const Bits& b) const {
    return std::equal(a.begin(), a.begin() + words_, b.begin());
  }
  int compare_bits(const Bits& a, const Bits& b) const {
    for (int w = 0; w < words_; ++w)
      if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
    return 0;
  }

  // lab and ref produce the same relabeled graph, so ref^-1 . lab is an
  // automorphism.
  void record_automorphism(const Labeling& lab, const Labeling& ref) {
    if (automorphisms_.size() >= kMaxAutomorphisms) return;
    std::array<int, kMaxN> ref_inv{};
    for (int v = 0; v < n_; ++v) ref_inv[ref[v]] = v;
    Labeling gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = static_cast<std::int8_t>(ref_inv[lab[v]]);
      identity = identity && gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(gamma);
  }

  // Is v in the orbit of `explored` under the automorphisms fixing the
  // current path prefix pointwise?
  bool in_orbit(int v, VertexSet explored, int depth) const {
    VertexSet orbit = explored;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& gamma : automorphisms_) {
        bool fixes = true;
        for (int d = 0; d < depth && fixes; ++d) fixes = gamma[path_[d]] == path_[d];
        if (!fixes) continue;
        VertexSet image = 0;
        for (VertexSet r = orbit; r; r &= r - 1) image |= VertexSet{1} << gamma[std::countr_zero(r)];
        if (image & ~orbit) {
          orbit |= image;
          grew = true;
        }
      }
      if ((orbit >> v) & 1u) return true;
    }
    return false;
  }

  Adjacency adj_;
  int n_;
  int words_;

  std::array<std::int8_t, kMaxN> path_{};
  bool have_first_ = false;
  Bits first_bits_{}, best_bits_{};
  Labeling first_lab_{}, best_lab_{};
  std::array<std::int8_t, kMaxN> first_path_{}, best_path_{};
  std::vector<Labeling> automorphisms_;
};

}  // namespace

CanonicalResult canonical_form(const Graph& g) { return Canonicalizer(g).run(); }

std::string signature(const Graph& g) { return to_graph6(canonical_form(g).canonical_graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).canonical_graph == canonical_form(b).canonical_graph;
}

}  // namespace pf
