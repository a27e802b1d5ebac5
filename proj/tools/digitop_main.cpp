#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "digitop/canon.hpp"
#include "digitop/catalog.hpp"
#include "digitop/contract.hpp"
#include "digitop/euler.hpp"
#include "digitop/io.hpp"
#include "digitop/transform.hpp"

namespace {

using namespace digitop;

struct GlobalFlags {
  std::size_t max_size = 25;
  std::size_t clique_cap = 32;
  std::string format;  // "", "text", "json", "dot" (dot: output only)
  std::string trace_path;
  std::string out_path;
  bool greedy = false;
  std::uint64_t seed = 0;

  ContractOptions contract() const { return ContractOptions{max_size, nullptr}; }
  EulerOptions euler() const { return EulerOptions{clique_cap}; }

  std::optional<FileFormat> input_format() const {
    if (format == "text") return FileFormat::text;
    if (format == "json") return FileFormat::json;
    if (format == "dot")
      fail(ErrorCode::invalid_spec, "--format dot applies to output only");
    return std::nullopt;
  }
};

SpaceDocument load(const GlobalFlags& flags, const std::string& path) {
  std::vector<std::string> warnings;
  SpaceDocument doc = load_space_file(path, flags.input_format(), &warnings);
  for (const auto& w : warnings) std::cerr << path << ": " << w << "\n";
  return doc;
}

void emit_document(const GlobalFlags& flags, const SpaceDocument& doc) {
  std::string rendered;
  if (flags.format == "dot") {
    rendered = export_dot(doc);
  } else if (flags.format == "json" ||
             (flags.format.empty() && !flags.out_path.empty() &&
              detect_format(flags.out_path) == FileFormat::json)) {
    rendered = serialize_json(doc);
  } else {
    rendered = serialize_text(doc);
  }
  if (flags.out_path.empty())
    std::cout << rendered;
  else
    write_file_atomic(flags.out_path, rendered);
}

void write_trace_steps(const std::string& path,
                       const std::vector<TransformStep>& steps) {
  std::string content;
  for (const auto& step : steps) content += step.wire() + "\n";
  write_file_atomic(path, content);
}

int cmd_check(const GlobalFlags& flags, const std::string& file) {
  const SpaceDocument doc = load(flags, file);
  const ContractOptions opts = flags.contract();
  if (flags.greedy) {
    if (doc.space.empty())
      fail(ErrorCode::empty_space, "contractibility of the empty space");
    DigitalSpace current = doc.space;
    std::vector<TransformStep> removed;
    for (bool stepped = true; stepped && current.point_count() > 1;) {
      stepped = false;
      for (const auto& label : current.labels()) {
        if (is_simple_point(current, label, opts)) {
          removed.push_back(TransformStep::delete_point(label));
          current = delete_simple_point(current, label, opts);
          stepped = true;
          break;
        }
      }
    }
    if (current.point_count() == 1) {
      if (!flags.trace_path.empty()) write_trace_steps(flags.trace_path, removed);
      std::cout << "contractible\n";
      return 0;
    }
    std::cerr << "greedy: stuck at " << current.point_count()
              << " points with no simple point; result inconclusive\n";
    std::cout << "unknown\n";
    return 1;
  }
  const ContractibilityVerdict verdict = is_contractible(doc.space, opts);
  if (verdict.contractible) {
    if (!flags.trace_path.empty() && verdict.witness) {
      std::vector<TransformStep> steps;
      for (const auto& label : *verdict.witness)
        steps.push_back(TransformStep::delete_point(label));
      write_trace_steps(flags.trace_path, steps);
    }
    std::cout << "contractible\n";
    return 0;
  }
  std::cout << "not contractible\n";
  return 1;
}

int cmd_simple(const GlobalFlags& flags, const std::string& file) {
  const SpaceDocument doc = load(flags, file);
  const DigitalSpace& space = doc.space;
  const ContractOptions opts = flags.contract();
  std::string out = "simple points:";
  for (const auto& label : simple_points(space, opts)) out += " " + label;
  out += "\ndeletable simple edges:";
  const auto& labels = space.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (space.adjacent(labels[i], labels[j]) &&
          is_simple_edge_for_deletion(space, labels[i], labels[j], opts))
        out += " (" + labels[i] + " " + labels[j] + ")";
    }
  }
  out += "\nattachable simple edges:";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (!space.adjacent(labels[i], labels[j]) &&
          is_simple_edge_for_attachment(space, labels[i], labels[j], opts))
        out += " (" + labels[i] + " " + labels[j] + ")";
    }
  }
  out += "\nsimple pairs:";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (space.adjacent(labels[i], labels[j]) &&
          is_simple_pair(space, labels[i], labels[j]))
        out += " (" + labels[i] + " " + labels[j] + ")";
    }
  }
  out += "\n";
  std::cout << out;
  return 0;
}

int cmd_euler(const GlobalFlags& flags, const std::string& file) {
  const SpaceDocument doc = load(flags, file);
  const EVector ev = e_vector(doc.space, flags.euler());
  std::cout << "e = " << ev.to_string() << "\n"
            << "chi = " << ev.alternating_sum().str() << "\n";
  return 0;
}

int cmd_apply(const GlobalFlags& flags, const std::vector<std::string>& args) {
  if (args.size() < 2)
    fail(ErrorCode::invalid_spec, "apply needs a file and a step");
  SpaceDocument doc = load(flags, args[0]);
  std::string wire;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (i > 1) wire += " ";
    wire += args[i];
  }
  const TransformStep step = TransformStep::parse_wire(wire);
  doc.space = apply(doc.space, step, flags.contract());
  emit_document(flags, doc);
  return 0;
}

int cmd_reduce(const GlobalFlags& flags, const std::string& file,
               const std::string& policy_name) {
  SpaceDocument doc = load(flags, file);
  ReducePolicy policy = ReducePolicy::full;
  if (policy_name == "points") policy = ReducePolicy::points_only;
  else if (policy_name == "edges") policy = ReducePolicy::points_and_edges;
  else if (policy_name != "full")
    fail(ErrorCode::invalid_spec, "unknown policy: " + policy_name);
  const ReductionTrace trace = reduce(doc.space, policy, flags.contract());
  if (!flags.trace_path.empty()) write_trace_steps(flags.trace_path, trace.steps);
  doc.space = trace.final_space;
  emit_document(flags, doc);
  return 0;
}

int cmd_iso(const GlobalFlags& flags, const std::string& file_a,
            const std::string& file_b) {
  const SpaceDocument a = load(flags, file_a);
  const SpaceDocument b = load(flags, file_b);
  if (are_isomorphic(a.space, b.space)) {
    std::cout << "isomorphic\n";
    return 0;
  }
  std::cout << "distinct\n";
  return 1;
}

int cmd_equiv(const GlobalFlags& flags, const std::string& file_a,
              const std::string& file_b) {
  const SpaceDocument a = load(flags, file_a);
  const SpaceDocument b = load(flags, file_b);
  switch (homotopy_equivalent_by_reduction(a.space, b.space, flags.contract(),
                                           flags.euler())) {
    case EquivalenceVerdict::equivalent:
      std::cout << "equivalent\n";
      return 0;
    case EquivalenceVerdict::distinct:
      std::cout << "distinct\n";
      return 1;
    case EquivalenceVerdict::unknown:
      std::cout << "unknown\n";
      return 1;
  }
  return 2;
}

long long parse_int_token(const std::string& token) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_spec, "not an integer: " + token);
  }
}

double parse_real_token(const std::string& token) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail(ErrorCode::invalid_spec, "not a number: " + token);
  }
}

int cmd_gen(const GlobalFlags& flags, const std::vector<std::string>& tokens) {
  if (tokens.empty()) fail(ErrorCode::invalid_spec, "gen needs a family");
  GeneratorSpec spec;
  if (tokens.size() == 1 && tokens[0].find('(') != std::string::npos) {
    spec = GeneratorSpec::parse(tokens[0]);
  } else {
    const std::string& family = tokens[0];
    auto expect_params = [&](std::size_t count) {
      if (tokens.size() != count + 1)
        fail(ErrorCode::invalid_spec,
             family + " expects " + std::to_string(count) + " parameter(s)");
    };
    if (family == "complete" || family == "path" || family == "cycle" ||
        family == "sphere") {
      expect_params(1);
      const long long n = parse_int_token(tokens[1]);
      if (family == "complete") spec = GeneratorSpec::complete(n);
      if (family == "path") spec = GeneratorSpec::path(n);
      if (family == "cycle") spec = GeneratorSpec::cycle(n);
      if (family == "sphere") spec = GeneratorSpec::sphere(n);
    } else if (family == "random") {
      expect_params(2);
      spec = GeneratorSpec::random(parse_int_token(tokens[1]),
                                   parse_real_token(tokens[2]), flags.seed);
    } else {
      fail(ErrorCode::invalid_spec,
           "unknown family (use functional form for composites): " + family);
    }
  }
  SpaceDocument doc;
  doc.space = generate(spec);
  emit_document(flags, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalFlags flags;
  CLI::App app{"digital topology toolkit: contractibility, simple-point "
               "analysis, homotopy-preserving transformations, Euler "
               "characteristics"};
  app.require_subcommand(1);

  app.add_option("--max-size", flags.max_size,
                 "size cap for contractibility queries (default 25)");
  app.add_option("--clique-cap", flags.clique_cap,
                 "size cap for complete-subspace enumeration (default 32)");
  app.add_option("--format", flags.format,
                 "file format: text|json (dot: output only)")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--trace", flags.trace_path, "write the step trace here");
  app.add_option("--out", flags.out_path, "write the result space here");
  app.add_flag("--greedy", flags.greedy,
               "check: greedy simple-point deletion; prints `unknown` when stuck");
  app.add_option("--seed", flags.seed, "seed for `gen random` (default 0)");

  std::string file, file_b, policy = "full";
  std::vector<std::string> tokens;

  auto* check = app.add_subcommand("check", "decide contractibility");
  check->add_option("file", file)->required();
  auto* simple = app.add_subcommand("simple", "list simple points, edges, pairs");
  simple->add_option("file", file)->required();
  auto* euler = app.add_subcommand("euler", "e-vector and Euler characteristic");
  euler->add_option("file", file)->required();
  auto* apply = app.add_subcommand("apply", "apply one transformation step");
  apply->prefix_command();
  auto* reduce = app.add_subcommand("reduce", "normalize by DSP/DSE/RSP");
  reduce->add_option("file", file)->required();
  reduce->add_option("--policy", policy, "points|edges|full (default full)");
  auto* iso = app.add_subcommand("iso", "isomorphism verdict");
  iso->add_option("file_a", file)->required();
  iso->add_option("file_b", file_b)->required();
  auto* equiv = app.add_subcommand("equiv", "homotopy-equivalence verdict");
  equiv->add_option("file_a", file)->required();
  equiv->add_option("file_b", file_b)->required();
  auto* gen = app.add_subcommand("gen", "generate a fixture space");
  gen->add_option("params", tokens, "family and parameters")->expected(-1);

  for (auto* sub : {check, simple, euler, reduce, iso, equiv, gen})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(flags, file);
    if (simple->parsed()) return cmd_simple(flags, file);
    if (euler->parsed()) return cmd_euler(flags, file);
    if (apply->parsed()) return cmd_apply(flags, apply->remaining());
    if (reduce->parsed()) return cmd_reduce(flags, file, policy);
    if (iso->parsed()) return cmd_iso(flags, file, file_b);
    if (equiv->parsed()) return cmd_equiv(flags, file, file_b);
    if (gen->parsed()) return cmd_gen(flags, tokens);
  } catch (const digitop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
