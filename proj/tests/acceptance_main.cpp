// Acceptance suite: one criterion per section, one pass/fail line each.
// Every comparison is exact; there are no tolerances anywhere. Criterion 10
// drives the CLI binary, whose path is argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "digitop/canon.hpp"
#include "digitop/catalog.hpp"
#include "digitop/contract.hpp"
#include "digitop/euler.hpp"
#include "digitop/io.hpp"
#include "digitop/transform.hpp"
#include "support/oracles.hpp"
#include "support/random_spaces.hpp"

using namespace digitop;

namespace {

std::string g_cli;
std::filesystem::path g_workdir;

struct Failure {
  std::string message;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

// ---------------------------------------------------------------------------
// enumeration helpers

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

DigitalSpace space_from_mask(int n, std::uint32_t mask) {
  const auto labels = index_labels(n);
  std::vector<std::pair<std::string, std::string>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask & (1u << bit)) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return DigitalSpace::build(labels, edges);
}

// All connected spaces on exactly n points, one representative per
// isomorphism class.
std::vector<DigitalSpace> connected_up_to_iso(int n) {
  std::map<CanonicalKey, DigitalSpace> reps;
  const int pairs = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    DigitalSpace s = space_from_mask(n, mask);
    if (!is_connected(s)) continue;
    reps.emplace(canonical_form(s), std::move(s));
  }
  std::vector<DigitalSpace> out;
  out.reserve(reps.size());
  for (auto& [key, s] : reps) out.push_back(std::move(s));
  return out;
}

// The contractible family built exactly the way it is defined: start from
// one point, attach points over contractible subspaces, dedupe by canonical
// form. census[k] holds all contractible spaces with k points up to
// isomorphism.
std::vector<std::vector<DigitalSpace>> contractible_census(int max_points) {
  std::vector<std::vector<DigitalSpace>> census(max_points + 1);
  std::vector<std::set<std::string>> seen(max_points + 1);
  census[1].push_back(DigitalSpace::build({"x1"}, {}));
  seen[1].insert(canonical_form(census[1][0]).bytes);
  for (int k = 1; k < max_points; ++k) {
    for (const auto& base : census[k]) {
      const auto& labels = base.labels();
      for (std::uint32_t subset = 1; subset < (1u << k); ++subset) {
        std::vector<std::string> rim_labels;
        for (int i = 0; i < k; ++i) {
          if (subset & (1u << i)) rim_labels.push_back(labels[i]);
        }
        if (!contractible(induced_subspace(base, PointSet(rim_labels))))
          continue;
        const auto grown = attach_simple_point(base, "z" + std::to_string(k + 1),
                                               PointSet(rim_labels));
        const auto key = canonical_form(grown).bytes;
        if (seen[k + 1].insert(key).second) census[k + 1].push_back(grown);
      }
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// CLI helpers

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  expect(pipe != nullptr, "popen failed for: " + command);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---------------------------------------------------------------------------
// criteria

void criterion_oracle_agreement() {
  std::size_t checked = 0;
  const std::vector<std::size_t> expected_counts{0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto reps = connected_up_to_iso(n);
    expect(reps.size() == expected_counts[n],
           "connected class count mismatch at n=" + std::to_string(n) + ": " +
               std::to_string(reps.size()));
    for (const auto& s : reps) {
      const bool ours = contractible(s);
      const bool reference =
          oracles::contractible_bruteforce(oracles::MatrixGraph::from_space(s));
      expect(ours == reference,
             "disagreement on a " + std::to_string(n) + "-point space (got " +
                 (ours ? "contractible" : "not contractible") + ")");
      ++checked;
    }
  }
  expect(checked == 143, "expected 143 classes, saw " + std::to_string(checked));
}

void criterion_small_census() {
  // classifier census over all connected spaces with <= 4 points
  std::vector<std::set<std::string>> classifier(5);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : connected_up_to_iso(n)) {
      if (contractible(s)) classifier[n].insert(canonical_form(s).bytes);
    }
  }
  // the same census by forward construction
  const auto census = contractible_census(4);
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> constructed;
    for (const auto& s : census[n]) constructed.insert(canonical_form(s).bytes);
    expect(constructed == classifier[n],
           "census mismatch at size " + std::to_string(n));
  }
  // trees with <= 4 points plus the small complete spaces, against the census
  const auto in_census = [&](const DigitalSpace& s) {
    return classifier[s.point_count()].contains(canonical_form(s).bytes);
  };
  const std::vector<DigitalSpace> trees = {
      DigitalSpace::build({"a"}, {}),
      DigitalSpace::build({"a", "b"}, {{"a", "b"}}),
      DigitalSpace::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
      DigitalSpace::build({"a", "b", "c", "d"},
                          {{"a", "b"}, {"b", "c"}, {"c", "d"}}),
      DigitalSpace::build({"a", "b", "c", "d"},
                          {{"a", "b"}, {"a", "c"}, {"a", "d"}}),
  };
  for (const auto& tree : trees) {
    expect(contractible(tree), "a small tree failed the classifier");
    expect(in_census(tree), "a small tree is missing from the census");
  }
  expect(contractible(generate(GeneratorSpec::complete(3))), "K3 failed");
  expect(contractible(generate(GeneratorSpec::complete(4))), "K4 failed");
  expect(in_census(generate(GeneratorSpec::complete(4))), "K4 not in census");
  const auto c4 = generate(GeneratorSpec::cycle(4));
  expect(!contractible(c4), "C4 must not be contractible");
  expect(!classifier[4].contains(canonical_form(c4).bytes),
         "C4 must not appear in the census");
  // sizes pinned by the enumeration itself: 1, 1, 2, 5
  expect(classifier[1].size() == 1 && classifier[2].size() == 1 &&
             classifier[3].size() == 2 && classifier[4].size() == 5,
         "unexpected census sizes");
}

void criterion_contractible_characteristic() {
  for (int i = 0; i < 500; ++i) {
    std::mt19937_64 rng(1000 + i);
    const std::size_t target = 1 + (i % 12);
    const auto s = testgen::random_contractible(target, rng);
    expect(euler_characteristic(s) == 1,
           "chi != 1 for a constructed contractible space (seed " +
               std::to_string(1000 + i) + ")");
  }
}

void criterion_transform_invariance() {
  constexpr int kNeeded = 1000;
  const EulerOptions eopts;

  auto chi = [&](const DigitalSpace& s) { return euler_characteristic(s, eopts); };

  // DSP (+ ASP round trip on the same configuration)
  {
    std::mt19937_64 rng(2101);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 200000, "DSP sampling exhausted");
      const auto s = testgen::random_space(2 + rng() % 13, 0.2 + 0.05 * (rng() % 13), rng);
      const auto simples = simple_points(s);
      if (simples.empty()) continue;
      const auto& v = simples[rng() % simples.size()];
      const auto r = rim(s, v);
      const auto smaller = delete_simple_point(s, v);
      expect(chi(smaller) == chi(s), "DSP changed chi");
      expect(attach_simple_point(smaller, v, r) == s, "ASP(DSP) round trip broke");
      ++done;
    }
  }
  // ASP (+ DSP round trip)
  {
    std::mt19937_64 rng(2202);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 200000, "ASP sampling exhausted");
      const auto s = testgen::random_space(1 + rng() % 13, 0.2 + 0.05 * (rng() % 13), rng);
      std::vector<std::string> rim_labels;
      for (int attempt = 0; attempt < 6 && rim_labels.empty(); ++attempt) {
        std::vector<std::string> candidate;
        for (const auto& label : s.labels())
          if (rng() % 3 == 0) candidate.push_back(label);
        if (!candidate.empty() &&
            contractible(induced_subspace(s, PointSet(candidate))))
          rim_labels = std::move(candidate);
      }
      if (rim_labels.empty()) continue;
      const auto grown = attach_simple_point(s, "za", PointSet(rim_labels));
      expect(chi(grown) == chi(s), "ASP changed chi");
      expect(delete_simple_point(grown, "za") == s, "DSP(ASP) round trip broke");
      ++done;
    }
  }
  // DSE (+ ASE round trip)
  {
    std::mt19937_64 rng(2303);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 200000, "DSE sampling exhausted");
      const auto s = testgen::random_space(3 + rng() % 12, 0.35 + 0.04 * (rng() % 13), rng);
      std::vector<std::pair<std::string, std::string>> candidates;
      for (const auto& [v, u] : s.edge_list())
        if (is_simple_edge_for_deletion(s, v, u)) candidates.emplace_back(v, u);
      if (candidates.empty()) continue;
      const auto& [v, u] = candidates[rng() % candidates.size()];
      const auto cut = delete_simple_edge(s, v, u);
      expect(chi(cut) == chi(s), "DSE changed chi");
      expect(attach_simple_edge(cut, v, u) == s, "ASE(DSE) round trip broke");
      ++done;
    }
  }
  // ASE (+ DSE round trip)
  {
    std::mt19937_64 rng(2404);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 200000, "ASE sampling exhausted");
      const auto s = testgen::random_space(3 + rng() % 12, 0.15 + 0.04 * (rng() % 12), rng);
      std::vector<std::pair<std::string, std::string>> candidates;
      const auto& labels = s.labels();
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
          if (!s.adjacent(labels[i], labels[j]) &&
              is_simple_edge_for_attachment(s, labels[i], labels[j]))
            candidates.emplace_back(labels[i], labels[j]);
      if (candidates.empty()) continue;
      const auto& [v, u] = candidates[rng() % candidates.size()];
      const auto glued = attach_simple_edge(s, v, u);
      expect(chi(glued) == chi(s), "ASE changed chi");
      expect(delete_simple_edge(glued, v, u) == s, "DSE(ASE) round trip broke");
      ++done;
    }
  }
  // REP
  {
    std::mt19937_64 rng(2505);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 200000, "REP sampling exhausted");
      const auto s = testgen::random_space(2 + rng() % 13, 0.2 + 0.05 * (rng() % 13), rng);
      const auto edges = s.edge_list();
      if (edges.empty()) continue;
      const auto& [v, u] = edges[rng() % edges.size()];
      expect(chi(replace_edge_with_point(s, v, u, "za")) == chi(s),
             "REP changed chi");
      ++done;
    }
  }
  // RSP
  {
    std::mt19937_64 rng(2606);
    int done = 0, guard = 0;
    while (done < kNeeded) {
      expect(++guard < 400000, "RSP sampling exhausted");
      const auto s = testgen::random_space(4 + rng() % 11, 0.1 + 0.03 * (rng() % 11), rng);
      std::vector<std::pair<std::string, std::string>> candidates;
      for (const auto& [v, u] : s.edge_list())
        if (is_simple_pair(s, v, u)) candidates.emplace_back(v, u);
      if (candidates.empty()) continue;
      const auto& [v, u] = candidates[rng() % candidates.size()];
      expect(chi(replace_simple_pair(s, v, u, "za")) == chi(s),
             "RSP changed chi");
      ++done;
    }
  }
}

void criterion_cone_formula() {
  std::mt19937_64 rng(3001);
  for (int round = 0; round < 200; ++round) {
    const auto g = testgen::random_space(1 + rng() % 12, 0.1 + 0.06 * (rng() % 12), rng);
    expect(e_vector(cone("zapex", g)) == cone_evector(e_vector(g)),
           "cone e-vector formula broke at round " + std::to_string(round));
  }
}

void criterion_contractible_families() {
  std::vector<DigitalSpace> asserted;
  for (int n = 1; n <= 8; ++n) {
    asserted.push_back(generate(GeneratorSpec::complete(n)));
    expect(contractible(asserted.back()), "K(n) failed at n=" + std::to_string(n));
  }
  {
    std::mt19937_64 rng(3102);
    for (int round = 0; round < 150; ++round) {
      const auto g = testgen::random_space(1 + rng() % 10, 0.1 + 0.07 * (rng() % 11), rng);
      asserted.push_back(cone("zapex", g));
      expect(contractible(asserted.back()), "a cone failed");
    }
  }
  {
    std::mt19937_64 rng(3203);
    for (int round = 0; round < 150; ++round) {
      const auto g = testgen::random_contractible(1 + rng() % 6, rng);
      const auto h = testgen::random_space(1 + rng() % 6, 0.1 + 0.08 * (rng() % 10),
                                           rng, "h");
      asserted.push_back(join(g, h));
      expect(contractible(asserted.back()), "a join with a contractible factor failed");
    }
  }
  {
    std::mt19937_64 rng(3304);
    for (int round = 0; round < 200; ++round) {
      const auto a = testgen::random_space(rng() % 4, 0.5, rng, "a");
      const auto b = testgen::random_space(rng() % 4, 0.5, rng, "b");
      const auto c = testgen::random_space(rng() % 4, 0.5, rng, "c");
      asserted.push_back(double_cone("v", "u", a, b, c));
      expect(contractible(asserted.back()), "a double cone failed");
    }
  }
  for (const auto& s : asserted)
    expect(is_connected(s), "an asserted-contractible space is disconnected");
}

void criterion_collapse_exhaustive() {
  const auto census = contractible_census(7);
  // spot-check the construction against the classifier on small sizes
  for (int n = 1; n <= 5; ++n) {
    std::size_t classified = 0;
    for (const auto& s : connected_up_to_iso(n))
      if (contractible(s)) ++classified;
    expect(classified == census[n].size(),
           "census/classifier disagreement at size " + std::to_string(n));
  }
  std::size_t pairs_checked = 0;
  std::vector<std::string> counterexamples;
  int smallest_failure = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : census[n]) {
      const auto& labels = g.labels();
      for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        std::vector<std::string> members;
        for (int i = 0; i < n; ++i)
          if (subset & (1u << i)) members.push_back(labels[i]);
        const PointSet target(members);
        const auto sub = induced_subspace(g, target);
        if (!contractible(sub)) continue;
        ++pairs_checked;
        const auto sequence = collapse_to_subspace(g, target);
        if (!sequence) {
          if (!smallest_failure) smallest_failure = n;
          std::string text = "H = {";
          for (const auto& m : members) text += " " + m;
          text += " } in G: ";
          for (const auto& [a, b] : g.edge_list())
            text += a + "-" + b + " ";
          counterexamples.push_back(std::move(text));
          continue;
        }
        DigitalSpace current = g;
        for (const auto& v : *sequence) {
          expect(is_simple_point(current, v), "collapse removed a non-simple point");
          current = induced_subspace(current, current.point_set().without(v));
        }
        expect(current == sub, "collapse did not end at the target subspace");
      }
    }
  }
  expect(pairs_checked > 10000, "suspiciously few collapse instances: " +
                                    std::to_string(pairs_checked));
  if (!counterexamples.empty()) {
    std::string summary =
        std::to_string(counterexamples.size()) +
        " counterexample candidate(s) where no simple-point deletion order "
        "reaches the contractible target (smallest at " +
        std::to_string(smallest_failure) +
        " points; each verdict is from the exhaustive search):";
    for (const auto& instance : counterexamples) summary += "\n       " + instance;
    throw Failure{summary};
  }
}

void criterion_cycle_rewrites() {
  const auto c4 = generate(GeneratorSpec::cycle(4));
  const auto c5 = generate(GeneratorSpec::cycle(5));
  expect(are_isomorphic(replace_edge_with_point(c4, "p1", "p2", "x"), c5),
         "REP on the 4-cycle must give the 5-cycle");
  expect(are_isomorphic(replace_simple_pair(c5, "p1", "p2", "z"), c4),
         "RSP on the 5-cycle must give the 4-cycle");
  for (int n = 5; n <= 12; ++n) {
    const auto trace = reduce(generate(GeneratorSpec::cycle(n)), ReducePolicy::full);
    expect(are_isomorphic(trace.final_space, c4),
           "reduce(C" + std::to_string(n) + ") did not stop at the 4-cycle");
  }
  for (int n = 4; n <= 16; ++n)
    expect(euler_characteristic(generate(GeneratorSpec::cycle(n))) == 0,
           "chi(C" + std::to_string(n) + ") != 0");
}

void criterion_sphere_fixtures() {
  const auto oct = generate(GeneratorSpec::sphere(2));
  EVector expected;
  expected.counts = {BigInt(6), BigInt(12), BigInt(8)};
  expect(e_vector(oct) == expected, "two-sphere e-vector mismatch");
  expect(euler_characteristic(oct) == 2, "two-sphere chi mismatch");
  expect(simple_points(oct).empty(), "two-sphere must have no simple points");
  const auto c4 = generate(GeneratorSpec::cycle(4));
  for (const auto& label : oct.labels())
    expect(are_isomorphic(rim_space(oct, label), c4),
           "a two-sphere rim is not a 4-cycle");
  const std::vector<long long> chis{2, 0, 2, 0};
  for (long long dim = 0; dim <= 3; ++dim)
    expect(euler_characteristic(generate(GeneratorSpec::sphere(dim))) == chis[dim],
           "sphere chi sequence broke at dim " + std::to_string(dim));
}

void criterion_determinism() {
  expect(!g_cli.empty(), "CLI binary path must be passed as argv[1]");
  // (a) 50-document corpus: parse(serialize) identity, byte-stable reserialize
  std::vector<SpaceDocument> corpus;
  for (int n = 1; n <= 8; ++n)
    corpus.push_back({1, generate(GeneratorSpec::complete(n)), std::nullopt});
  for (int n = 1; n <= 6; ++n)
    corpus.push_back({1, generate(GeneratorSpec::path(n)), "path-" + std::to_string(n)});
  for (int n = 3; n <= 8; ++n)
    corpus.push_back({1, generate(GeneratorSpec::cycle(n)), std::nullopt});
  for (int dim = 0; dim <= 3; ++dim)
    corpus.push_back({1, generate(GeneratorSpec::sphere(dim)), "sphere"});
  for (int i = 0; i < 26; ++i)
    corpus.push_back({1,
                      generate(GeneratorSpec::random(4 + i % 9, 0.15 + 0.025 * (i % 10),
                                                     900 + i)),
                      i % 2 ? std::optional<std::string>("rnd-" + std::to_string(i))
                            : std::nullopt});
  expect(corpus.size() == 50, "corpus must hold 50 documents");
  for (const auto& doc : corpus) {
    const std::string text = serialize_text(doc);
    expect(parse_text(text) == doc, "text round trip broke");
    expect(serialize_text(parse_text(text)) == text, "text bytes unstable");
    const std::string json = serialize_json(doc);
    expect(parse_json(json) == doc, "json round trip broke");
    expect(serialize_json(parse_json(json)) == json, "json bytes unstable");
  }

  // (b) identical CLI invocations are byte-identical
  const auto dir = g_workdir;
  save_space_file((dir / "c4.ds").string(),
                  {1, generate(GeneratorSpec::cycle(4)), std::nullopt});
  save_space_file((dir / "c5.ds").string(),
                  {1, generate(GeneratorSpec::cycle(5)), std::nullopt});
  save_space_file((dir / "c9.ds").string(),
                  {1, generate(GeneratorSpec::cycle(9)), std::nullopt});
  save_space_file((dir / "k6.ds").string(),
                  {1, generate(GeneratorSpec::complete(6)), std::nullopt});
  save_space_file((dir / "oct.ds").string(),
                  {1, generate(GeneratorSpec::sphere(2)), std::nullopt});
  {
    std::mt19937_64 rng(31);
    save_space_file((dir / "c5b.ds").string(),
                    {1,
                     testgen::relabel_randomly(generate(GeneratorSpec::cycle(5)), rng),
                     std::nullopt});
  }
  const std::string c4 = (dir / "c4.ds").string();
  const std::string c5 = (dir / "c5.ds").string();
  const std::string c9 = (dir / "c9.ds").string();
  const std::string k6 = (dir / "k6.ds").string();
  const std::string oct = (dir / "oct.ds").string();
  const std::string c5b = (dir / "c5b.ds").string();
  const std::vector<std::pair<std::string, std::vector<std::string>>> invocations = {
      {"gen sphere 2", {}},
      {"gen random 12 0.35 --seed 42", {}},
      {"--trace " + (dir / "w.txt").string() + " check " + k6,
       {(dir / "w.txt").string()}},
      {"check " + c4, {}},
      {"euler " + oct, {}},
      {"simple " + c5, {}},
      {"--trace " + (dir / "r.txt").string() + " --out " + (dir / "r.ds").string() +
           " reduce " + c9 + " --policy full",
       {(dir / "r.txt").string(), (dir / "r.ds").string()}},
      {"iso " + c5 + " " + c5b, {}},
      {"equiv " + c5 + " " + c9, {}},
      {"apply " + c4 + " REP p1 p2 '->' x", {}},
  };
  for (const auto& [args, files] : invocations) {
    const auto first = run_cli(args);
    std::vector<std::string> first_files;
    for (const auto& f : files) first_files.push_back(slurp(f));
    const auto second = run_cli(args);
    expect(first.exit_code == second.exit_code,
           "exit codes differ for: " + args);
    expect(first.output == second.output, "stdout differs for: " + args);
    for (std::size_t i = 0; i < files.size(); ++i)
      expect(first_files[i] == slurp(files[i]), "file differs for: " + args);
    expect(first.exit_code == 0 || first.exit_code == 1,
           "unexpected exit code " + std::to_string(first.exit_code) + " for: " + args);
  }
  // spot-checks of the stable strings themselves
  expect(run_cli("check " + c4).output == "not contractible\n", "check wording");
  expect(run_cli("check " + k6).output == "contractible\n", "check wording");
  expect(run_cli("euler " + oct).output == "e = (6, 12, 8)\nchi = 2\n",
         "euler format");
  expect(run_cli("iso " + c5 + " " + c5b).output == "isomorphic\n", "iso wording");
  expect(run_cli("equiv " + c5 + " " + c9).output == "equivalent\n",
         "equiv wording");

  // (c) canonical keys survive 1000 random relabelings
  std::mt19937_64 rng(4001);
  for (int round = 0; round < 1000; ++round) {
    const auto s = testgen::random_space(2 + rng() % 11, 0.1 + 0.07 * (rng() % 11), rng);
    expect(canonical_form(s) == canonical_form(testgen::relabel_randomly(s, rng)),
           "canonical key changed under relabeling at round " + std::to_string(round));
  }
}

struct Criterion {
  const char* title;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  g_workdir = std::filesystem::temp_directory_path() /
              ("digitop-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(g_workdir);

  const std::vector<Criterion> criteria = {
      {"contractibility agrees with the definition-direct search on all "
       "connected spaces with <= 6 points",
       criterion_oracle_agreement},
      {"<= 4-point census: closed under point attachment, contains all small "
       "trees and K(3), K(4), excludes the 4-cycle",
       criterion_small_census},
      {"500 randomly constructed contractible spaces (<= 12 points) have "
       "chi = 1",
       criterion_contractible_characteristic},
      {"1000+ applications of each transformation preserve chi; the "
       "delete/attach pairs round-trip exactly",
       criterion_transform_invariance},
      {"cone e-vector formula matches enumeration on 200 random spaces",
       criterion_cone_formula},
      {"complete spaces, cones, joins with a contractible factor, and double "
       "cones are contractible and connected",
       criterion_contractible_families},
      {"collapse onto every contractible subspace succeeds for all "
       "contractible spaces with <= 7 points",
       criterion_collapse_exhaustive},
      {"cycle rewrites: REP/RSP between C4 and C5, reduce(Cn) ends at C4, "
       "chi(Cn) = 0",
       criterion_cycle_rewrites},
      {"sphere fixtures: e-vector, chi, rigidity, rims, alternating chi",
       criterion_sphere_fixtures},
      {"determinism: 50-file round trips, byte-identical CLI reruns, 1000 "
       "relabeling-invariant keys",
       criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i].run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.message;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failures;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("[%2zu] %s: %s (%.1fs)\n", i + 1, criteria[i].title,
                verdict.c_str(), elapsed / 1000.0);
    if (!detail.empty()) std::printf("     %s\n", detail.c_str());
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::error_code ec;
    std::filesystem::remove_all(g_workdir, ec);
  } else {
    std::printf("workdir kept for inspection: %s\n", g_workdir.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
