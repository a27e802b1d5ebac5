#include "digitop/canon.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace digitop {

namespace {

// Canonical labeling search: iterated neighborhood refinement to an ordered
// partition, then backtracking over the choices that break remaining
// symmetry, keeping the lexicographically least adjacency matrix. Leaves
// that tie with the current best yield automorphisms, which prune sibling
// branches (orbit pruning restricted to automorphisms fixing the
// individualized prefix pointwise).
class CanonSearch {
 public:
  explicit CanonSearch(const DigitalSpace& space)
      : n_(static_cast<int>(space.point_count())) {
    adj_.assign(n_, std::vector<char>(n_, 0));
    for (int i = 0; i < n_; ++i) {
      for (std::uint32_t j : space.neighbors_at(i)) adj_[i][j] = 1;
    }
  }

  std::vector<std::uint64_t> run() {
    Partition whole(1);
    whole[0].resize(n_);
    std::iota(whole[0].begin(), whole[0].end(), 0);
    std::vector<int> prefix;
    descend(whole, prefix);
    return best_;
  }

 private:
  using Partition = std::vector<std::vector<int>>;

  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n_);
      for (std::size_t ci = 0; ci < p.size(); ++ci) {
        for (int v : p[ci]) cell_of[v] = static_cast<int>(ci);
      }
      Partition next;
      next.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // signature: neighbor count per current cell; cells split into
        // groups ordered by signature, which is relabeling-invariant
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> counts(p.size(), 0);
          for (int u = 0; u < n_; ++u) {
            if (adj_[v][u]) ++counts[cell_of[u]];
          }
          sigs.emplace_back(std::move(counts), v);
        }
        std::stable_sort(sigs.begin(), sigs.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t group_start = 0;
        std::size_t groups = 0;
        for (std::size_t k = 1; k <= sigs.size(); ++k) {
          if (k == sigs.size() || sigs[k].first != sigs[group_start].first) {
            std::vector<int> group;
            group.reserve(k - group_start);
            for (std::size_t t = group_start; t < k; ++t)
              group.push_back(sigs[t].second);
            next.push_back(std::move(group));
            ++groups;
            group_start = k;
          }
        }
        if (groups > 1) changed = true;
      }
      p = std::move(next);
    }
  }

  std::vector<std::uint64_t> pack(const std::vector<int>& labeling) const {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    std::size_t b = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++b) {
        if (adj_[labeling[i]][labeling[j]])
          words[b / 64] |= std::uint64_t(1) << (63 - (b % 64));
      }
    }
    return words;
  }

  void record_automorphism(const std::vector<int>& labeling) {
    if (automorphisms_.size() >= 256) return;
    std::vector<int> perm(n_);
    bool identity = true;
    for (int k = 0; k < n_; ++k) {
      perm[best_labeling_[k]] = labeling[k];
      if (best_labeling_[k] != labeling[k]) identity = false;
    }
    if (!identity) automorphisms_.push_back(std::move(perm));
  }

  bool pruned_by_orbit(int v, const std::vector<int>& tried,
                       const std::vector<int>& prefix) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& perm : automorphisms_) {
      bool fixes_prefix = true;
      for (int x : prefix) {
        if (perm[x] != x) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(perm[x]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(v);
    for (int t : tried) {
      if (find(t) == root) return true;
    }
    return false;
  }

  void descend(Partition p, std::vector<int>& prefix) {
    refine(p);
    int target = -1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    }
    if (target < 0) {
      std::vector<int> labeling;
      labeling.reserve(n_);
      for (const auto& cell : p) labeling.push_back(cell[0]);
      auto candidate = pack(labeling);
      if (!have_best_ || candidate < best_) {
        best_ = std::move(candidate);
        best_labeling_ = std::move(labeling);
        have_best_ = true;
      } else if (candidate == best_) {
        record_automorphism(labeling);
      }
      return;
    }
    std::vector<int> tried;
    std::vector<int> cell = p[target];
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
      if (pruned_by_orbit(v, tried, prefix)) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (static_cast<int>(i) != target) {
          child.push_back(p[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(p[i].size() - 1);
        for (int w : p[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  int n_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_labeling_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

CanonicalKey canonical_form(const DigitalSpace& space,
                            const CanonOptions& options) {
  if (space.empty())
    fail(ErrorCode::empty_space, "canonical form of the empty space");
  if (space.point_count() > options.size_cap)
    fail(ErrorCode::size_cap_exceeded,
         std::to_string(space.point_count()) + " points, cap " +
             std::to_string(options.size_cap));
  CanonSearch search(space);
  const auto words = search.run();
  CanonicalKey key;
  key.bytes = std::to_string(space.point_count());
  key.bytes.push_back(':');
  for (std::uint64_t w : words) {
    for (int shift = 56; shift >= 0; shift -= 8)
      key.bytes.push_back(static_cast<char>((w >> shift) & 0xFF));
  }
  return key;
}

bool are_isomorphic(const DigitalSpace& g, const DigitalSpace& h,
                    const CanonOptions& options) {
  if (g.empty() || h.empty())
    fail(ErrorCode::empty_space, "isomorphism of an empty space");
  if (g.point_count() != h.point_count() || g.edge_count() != h.edge_count())
    return false;
  auto degrees = [](const DigitalSpace& s) {
    std::vector<std::size_t> d;
    d.reserve(s.point_count());
    for (std::size_t i = 0; i < s.point_count(); ++i)
      d.push_back(s.degree_at(i));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(g) != degrees(h)) return false;
  return canonical_form(g, options) == canonical_form(h, options);
}

}  // namespace digitop
