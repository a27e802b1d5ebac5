#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitop/space.hpp"

namespace digitop {

// Deterministic fixture generators. Flat families label their points
// p1..pn; composite families relabel children with positional prefixes
// (cone: apex `v`, child prefix `c.`; join: `l.`/`r.`; double cone: apexes
// `v`,`u`, part prefixes `a.`/`b.`/`c.`) so nesting never collides.
//
// Textual form (parse/to_string round trip):
//   complete(4)  path(3)  cycle(7)  sphere(2)
//   random(10,0.4,42)
//   cone_over(cycle(4))  join_of(complete(2),complete(3))
//   double_cone(path(1),path(1),complete(0))
struct GeneratorSpec {
  enum class Family {
    complete,
    path,
    cycle,
    sphere,
    cone_over,
    join_of,
    double_cone,
    random,
  };

  Family family = Family::complete;
  long long n = 1;                  // points (complete/path/cycle/random) or dimension (sphere)
  double edge_probability = 0.0;    // random
  std::uint64_t seed = 0;           // random
  std::vector<GeneratorSpec> parts; // cone_over: 1, join_of: 2, double_cone: 3

  static GeneratorSpec complete(long long n);
  static GeneratorSpec path(long long n);
  static GeneratorSpec cycle(long long n);
  static GeneratorSpec sphere(long long dim);
  static GeneratorSpec random(long long n, double p, std::uint64_t seed);
  static GeneratorSpec cone_over(GeneratorSpec base);
  static GeneratorSpec join_of(GeneratorSpec left, GeneratorSpec right);
  static GeneratorSpec double_cone_of(GeneratorSpec a, GeneratorSpec b,
                                      GeneratorSpec c);

  static GeneratorSpec parse(const std::string& text);
  std::string to_string() const;
};

DigitalSpace generate(const GeneratorSpec& spec);

// The random family's documented generator: a 64-bit linear congruential
// generator, x <- 6364136223846793005*x + 1442695040888963407 (mod 2^64),
// seeded directly with the spec seed; each draw takes the top 53 bits as a
// uniform double in [0,1). Edges are drawn one coin flip per unordered
// label pair, pairs enumerated in lexicographic label order.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace digitop
