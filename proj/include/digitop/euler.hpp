#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "digitop/space.hpp"

namespace digitop {

using BigInt = boost::multiprecision::cpp_int;

struct EulerOptions {
  std::size_t clique_cap = 32;  // cap for complete-subspace enumeration
};

// Counts of complete subspaces by point count: counts[k-1] complete
// subspaces on k points, up to the clique number. No trailing zeros.
struct EVector {
  std::vector<BigInt> counts;

  std::size_t clique_number() const { return counts.size(); }
  BigInt alternating_sum() const;
  std::string to_string() const;  // "(n1, n2, ..., ns)"

  bool operator==(const EVector&) const = default;
};

// Exact complete-subspace counts by exhaustive ordered-extension
// enumeration (every clique extended only by higher-indexed common
// neighbors, so each complete subspace is visited once).
EVector e_vector(const DigitalSpace& space, const EulerOptions& options = {});

// Alternating sum n1 - n2 + n3 - ...
BigInt euler_characteristic(const DigitalSpace& space,
                            const EulerOptions& options = {});

// e-vector of the cone over a space, computed from the space's e-vector
// alone: (n1+1, n2+n1, ..., ns+n(s-1), ns).
EVector cone_evector(const EVector& base);

}  // namespace digitop
