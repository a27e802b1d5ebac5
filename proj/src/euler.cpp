#include "digitop/euler.hpp"

#include <algorithm>
#include <bit>

namespace digitop {

BigInt EVector::alternating_sum() const {
  BigInt total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k % 2 == 0)
      total += counts[k];
    else
      total -= counts[k];
  }
  return total;
}

std::string EVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) out += ", ";
    out += counts[k].str();
  }
  out += ")";
  return out;
}

namespace {

class CliqueCounter {
 public:
  explicit CliqueCounter(const DigitalSpace& space)
      : n_(space.point_count()), words_((n_ + 63) / 64) {
    rows_.assign(n_, std::vector<std::uint64_t>(words_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t j : space.neighbors_at(i))
        rows_[i][j / 64] |= std::uint64_t(1) << (j % 64);
    }
    counts_.assign(n_, 0);
  }

  std::vector<std::uint64_t> run() {
    std::vector<std::uint64_t> candidates(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      ++counts_[0];
      // extend only by strictly higher-indexed common neighbors
      for (std::size_t w = 0; w < words_; ++w) candidates[w] = rows_[v][w];
      mask_below(candidates, v + 1);
      extend(1, candidates);
    }
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    return counts_;
  }

 private:
  void mask_below(std::vector<std::uint64_t>& set, std::size_t from) const {
    for (std::size_t w = 0; w < words_; ++w) {
      if (w < from / 64)
        set[w] = 0;
      else if (w == from / 64 && from % 64)
        set[w] &= ~((std::uint64_t(1) << (from % 64)) - 1);
    }
  }

  void extend(std::size_t depth, const std::vector<std::uint64_t>& candidates) {
    std::vector<std::uint64_t> next(words_);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = candidates[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        const std::size_t v = w * 64 + b;
        ++counts_[depth];
        bool any = false;
        for (std::size_t t = 0; t < words_; ++t) {
          next[t] = candidates[t] & rows_[v][t];
          any = any || next[t];
        }
        // keep only candidates above v
        if (any) {
          mask_below(next, v + 1);
          any = false;
          for (std::size_t t = 0; t < words_; ++t) any = any || next[t];
        }
        if (any) extend(depth + 1, next);
      }
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

EVector e_vector(const DigitalSpace& space, const EulerOptions& options) {
  if (space.empty()) fail(ErrorCode::empty_space, "e-vector of the empty space");
  if (space.point_count() > options.clique_cap)
    fail(ErrorCode::size_cap_exceeded,
         std::to_string(space.point_count()) + " points, cap " +
             std::to_string(options.clique_cap));
  CliqueCounter counter(space);
  const auto raw = counter.run();
  EVector result;
  result.counts.reserve(raw.size());
  for (std::uint64_t c : raw) result.counts.emplace_back(c);
  return result;
}

BigInt euler_characteristic(const DigitalSpace& space,
                            const EulerOptions& options) {
  return e_vector(space, options).alternating_sum();
}

EVector cone_evector(const EVector& base) {
  EVector result;
  const std::size_t s = base.counts.size();
  result.counts.resize(s + 1);
  for (std::size_t k = 0; k <= s; ++k) {
    BigInt value = 0;
    if (k < s) value += base.counts[k];
    if (k == 0)
      value += 1;
    else
      value += base.counts[k - 1];
    result.counts[k] = value;
  }
  return result;
}

}  // namespace digitop
