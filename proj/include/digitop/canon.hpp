#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "digitop/space.hpp"

namespace digitop {

struct CanonOptions {
  std::size_t size_cap = 64;
};

// Opaque canonical key: equal keys iff the underlying spaces are isomorphic.
// Encodes the point count and the lexicographically least adjacency matrix
// over all relabelings to 0..n-1.
struct CanonicalKey {
  std::string bytes;

  bool operator==(const CanonicalKey&) const = default;
  bool operator<(const CanonicalKey& other) const { return bytes < other.bytes; }

  std::string hex() const;  // for diagnostics
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const {
    return std::hash<std::string>{}(key.bytes);
  }
};

// Canonical form via iterated neighborhood-degree refinement plus
// backtracking over automorphism-breaking choices; exact, never a hash.
CanonicalKey canonical_form(const DigitalSpace& space,
                            const CanonOptions& options = {});

// Key comparison with fast rejection on point/edge counts and the sorted
// degree sequence.
bool are_isomorphic(const DigitalSpace& g, const DigitalSpace& h,
                    const CanonOptions& options = {});

}  // namespace digitop
