#include "digitop/catalog.hpp"

#include <cctype>
#include <charconv>

namespace digitop {

GeneratorSpec GeneratorSpec::complete(long long n) {
  GeneratorSpec s;
  s.family = Family::complete;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::path(long long n) {
  GeneratorSpec s;
  s.family = Family::path;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::cycle(long long n) {
  GeneratorSpec s;
  s.family = Family::cycle;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::sphere(long long dim) {
  GeneratorSpec s;
  s.family = Family::sphere;
  s.n = dim;
  return s;
}

GeneratorSpec GeneratorSpec::random(long long n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.family = Family::random;
  s.n = n;
  s.edge_probability = p;
  s.seed = seed;
  return s;
}

GeneratorSpec GeneratorSpec::cone_over(GeneratorSpec base) {
  GeneratorSpec s;
  s.family = Family::cone_over;
  s.parts.push_back(std::move(base));
  return s;
}

GeneratorSpec GeneratorSpec::join_of(GeneratorSpec left, GeneratorSpec right) {
  GeneratorSpec s;
  s.family = Family::join_of;
  s.parts.push_back(std::move(left));
  s.parts.push_back(std::move(right));
  return s;
}

GeneratorSpec GeneratorSpec::double_cone_of(GeneratorSpec a, GeneratorSpec b,
                                            GeneratorSpec c) {
  GeneratorSpec s;
  s.family = Family::double_cone;
  s.parts.push_back(std::move(a));
  s.parts.push_back(std::move(b));
  s.parts.push_back(std::move(c));
  return s;
}

namespace {

std::string point_label(long long i) { return "p" + std::to_string(i); }

DigitalSpace labeled_points(long long n) {
  std::vector<std::string> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long long i = 1; i <= n; ++i) points.push_back(point_label(i));
  return DigitalSpace::build(points, {});
}

DigitalSpace relabel_with_prefix(const DigitalSpace& space,
                                 const std::string& prefix) {
  std::vector<std::string> points;
  points.reserve(space.point_count());
  for (const auto& label : space.labels()) points.push_back(prefix + label);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : space.edge_list())
    edges.emplace_back(prefix + a, prefix + b);
  return DigitalSpace::build(points, edges);
}

[[noreturn]] void bad_spec(const std::string& what) {
  fail(ErrorCode::invalid_spec, what);
}

DigitalSpace generate_complete(long long n) {
  if (n < 0) bad_spec("complete: n must be >= 0");
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  for (long long i = 1; i <= n; ++i) {
    points.push_back(point_label(i));
    for (long long j = i + 1; j <= n; ++j)
      edges.emplace_back(point_label(i), point_label(j));
  }
  return DigitalSpace::build(points, edges);
}

DigitalSpace generate_path(long long n) {
  if (n < 0) bad_spec("path: n must be >= 0");
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  for (long long i = 1; i <= n; ++i) {
    points.push_back(point_label(i));
    if (i > 1) edges.emplace_back(point_label(i - 1), point_label(i));
  }
  return DigitalSpace::build(points, edges);
}

DigitalSpace generate_cycle(long long n) {
  if (n < 3) bad_spec("cycle: n must be >= 3");
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  for (long long i = 1; i <= n; ++i) {
    points.push_back(point_label(i));
    if (i > 1) edges.emplace_back(point_label(i - 1), point_label(i));
  }
  edges.emplace_back(point_label(n), point_label(1));
  return DigitalSpace::build(points, edges);
}

// Join of dim+1 point pairs: all edges except within each pair
// (p1,p2), (p3,p4), ...
DigitalSpace generate_sphere(long long dim) {
  if (dim < 0) bad_spec("sphere: dimension must be >= 0");
  const long long n = 2 * (dim + 1);
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> edges;
  for (long long i = 1; i <= n; ++i) points.push_back(point_label(i));
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i + 1; j <= n; ++j) {
      const bool antipodes = (j == i + 1) && (i % 2 == 1);
      if (!antipodes) edges.emplace_back(point_label(i), point_label(j));
    }
  }
  return DigitalSpace::build(points, edges);
}

DigitalSpace generate_random(long long n, double p, std::uint64_t seed) {
  if (n < 0) bad_spec("random: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) bad_spec("random: p must be in [0,1]");
  const DigitalSpace shell = labeled_points(n);
  std::vector<std::pair<std::string, std::string>> edges;
  Lcg lcg(seed);
  const auto& labels = shell.labels();  // sorted; pairs in label order
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (lcg.next_unit() < p) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return DigitalSpace::build(labels, edges);
}

}  // namespace

DigitalSpace generate(const GeneratorSpec& spec) {
  using Family = GeneratorSpec::Family;
  switch (spec.family) {
    case Family::complete:
      return generate_complete(spec.n);
    case Family::path:
      return generate_path(spec.n);
    case Family::cycle:
      return generate_cycle(spec.n);
    case Family::sphere:
      return generate_sphere(spec.n);
    case Family::random:
      return generate_random(spec.n, spec.edge_probability, spec.seed);
    case Family::cone_over: {
      if (spec.parts.size() != 1) bad_spec("cone_over: expects one part");
      return cone("v", relabel_with_prefix(generate(spec.parts[0]), "c."));
    }
    case Family::join_of: {
      if (spec.parts.size() != 2) bad_spec("join_of: expects two parts");
      return join(relabel_with_prefix(generate(spec.parts[0]), "l."),
                  relabel_with_prefix(generate(spec.parts[1]), "r."));
    }
    case Family::double_cone: {
      if (spec.parts.size() != 3) bad_spec("double_cone: expects three parts");
      return double_cone("v", "u",
                         relabel_with_prefix(generate(spec.parts[0]), "a."),
                         relabel_with_prefix(generate(spec.parts[1]), "b."),
                         relabel_with_prefix(generate(spec.parts[2]), "c."));
    }
  }
  bad_spec("unknown family");
}

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      fail(ErrorCode::invalid_spec,
           std::string("expected '") + c + "' at offset " + std::to_string(pos) +
               " in: " + text);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos)
      fail(ErrorCode::invalid_spec,
           "expected a name at offset " + std::to_string(start) + " in: " + text);
    return text.substr(start, pos - start);
  }

  std::string number_token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '.' || text[pos] == '-' || text[pos] == '+' ||
            text[pos] == 'e' || text[pos] == 'E'))
      ++pos;
    if (start == pos)
      fail(ErrorCode::invalid_spec,
           "expected a number at offset " + std::to_string(start) + " in: " + text);
    return text.substr(start, pos - start);
  }

  long long integer() {
    const std::string tok = number_token();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorCode::invalid_spec, "not an integer: " + tok);
    return value;
  }

  double real() {
    const std::string tok = number_token();
    try {
      std::size_t used = 0;
      const double value = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_spec, "not a number: " + tok);
    }
  }

  GeneratorSpec spec() {
    const std::string name = ident();
    expect('(');
    GeneratorSpec out;
    if (name == "complete" || name == "path" || name == "cycle" ||
        name == "sphere") {
      const long long value = integer();
      if (name == "complete") out = GeneratorSpec::complete(value);
      if (name == "path") out = GeneratorSpec::path(value);
      if (name == "cycle") out = GeneratorSpec::cycle(value);
      if (name == "sphere") out = GeneratorSpec::sphere(value);
    } else if (name == "random") {
      const long long n = integer();
      expect(',');
      const double p = real();
      std::uint64_t seed = 0;
      if (eat(',')) seed = static_cast<std::uint64_t>(integer());
      out = GeneratorSpec::random(n, p, seed);
    } else if (name == "cone_over" || name == "cone") {
      out = GeneratorSpec::cone_over(spec());
    } else if (name == "join_of" || name == "join") {
      GeneratorSpec left = spec();
      expect(',');
      out = GeneratorSpec::join_of(std::move(left), spec());
    } else if (name == "double_cone" || name == "dcone") {
      GeneratorSpec a = spec();
      expect(',');
      GeneratorSpec b = spec();
      expect(',');
      out = GeneratorSpec::double_cone_of(std::move(a), std::move(b), spec());
    } else {
      fail(ErrorCode::invalid_spec, "unknown family: " + name);
    }
    expect(')');
    return out;
  }
};

std::string trim_trailing_zeros(double value) {
  std::string s = std::to_string(value);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.push_back('0');
  return s;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  SpecParser parser{text};
  GeneratorSpec out = parser.spec();
  parser.skip_ws();
  if (parser.pos != text.size())
    fail(ErrorCode::invalid_spec, "trailing input in: " + text);
  return out;
}

std::string GeneratorSpec::to_string() const {
  switch (family) {
    case Family::complete:
      return "complete(" + std::to_string(n) + ")";
    case Family::path:
      return "path(" + std::to_string(n) + ")";
    case Family::cycle:
      return "cycle(" + std::to_string(n) + ")";
    case Family::sphere:
      return "sphere(" + std::to_string(n) + ")";
    case Family::random:
      return "random(" + std::to_string(n) + "," +
             trim_trailing_zeros(edge_probability) + "," + std::to_string(seed) +
             ")";
    case Family::cone_over:
      return "cone_over(" + parts[0].to_string() + ")";
    case Family::join_of:
      return "join_of(" + parts[0].to_string() + "," + parts[1].to_string() + ")";
    case Family::double_cone:
      return "double_cone(" + parts[0].to_string() + "," + parts[1].to_string() +
             "," + parts[2].to_string() + ")";
  }
  return "?";
}

}  // namespace digitop
