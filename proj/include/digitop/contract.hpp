#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "digitop/canon.hpp"
#include "digitop/space.hpp"

namespace digitop {

// Shared contractibility memo, keyed on canonical forms so hits survive any
// relabeling. Get-or-insert is atomic; duplicated computation is harmless.
class ContractCache {
 public:
  std::optional<bool> lookup(const CanonicalKey& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const CanonicalKey& key, bool value) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.emplace(key, value);
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> entries_;
};

// Process-wide cache used when options carry no explicit one.
ContractCache& default_contract_cache();

struct ContractOptions {
  std::size_t size_cap = 25;       // hard cap for contractibility queries
  ContractCache* cache = nullptr;  // nullptr -> default_contract_cache()
};

struct ContractibilityVerdict {
  bool contractible = false;
  // Full removal sequence down to one point, present iff contractible;
  // every removed point is simple at its removal time.
  std::optional<std::vector<std::string>> witness;
};

// Backtracking search over simple-point deletions, memoized on canonical
// forms; disconnected spaces are rejected outright.
ContractibilityVerdict is_contractible(const DigitalSpace& space,
                                       const ContractOptions& options = {});

// Same decision without witness construction.
bool contractible(const DigitalSpace& space, const ContractOptions& options = {});

// True iff the subspace induced by the rim of v is contractible. A point
// with an empty rim is not simple.
bool is_simple_point(const DigitalSpace& space, const std::string& v,
                     const ContractOptions& options = {});

// Label-sorted list of all simple points.
std::vector<std::string> simple_points(const DigitalSpace& space,
                                       const ContractOptions& options = {});

// Adjacent pair whose joint rim induces a contractible subspace.
bool is_simple_edge_for_deletion(const DigitalSpace& space, const std::string& v,
                                 const std::string& u,
                                 const ContractOptions& options = {});

// Non-adjacent pair whose joint rim induces a contractible subspace.
bool is_simple_edge_for_attachment(const DigitalSpace& space,
                                   const std::string& v, const std::string& u,
                                   const ContractOptions& options = {});

// Adjacent pair {v,u} whose neighborhood splits as a double cone: with
// C = joint rim, A = rim(v) - C - {u}, B = rim(u) - C - {v}, no point of A
// is adjacent to any point of B. Purely combinatorial.
bool is_simple_pair(const DigitalSpace& space, const std::string& v,
                    const std::string& u);

// Ordered deletion sequence of the points of G - H, each simple at its
// removal time, ending exactly at the subspace induced by H. Exhaustive
// backtracking; nullopt means the search failed, which is reported to the
// caller as a distinguished outcome rather than swallowed.
std::optional<std::vector<std::string>> collapse_to_subspace(
    const DigitalSpace& space, const PointSet& target,
    const ContractOptions& options = {});

}  // namespace digitop
