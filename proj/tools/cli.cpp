#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "xjoin/automorphism.hpp"
#include "xjoin/construction.hpp"
#include "xjoin/decomposition.hpp"
#include "xjoin/errors.hpp"
#include "xjoin/io.hpp"
#include "xjoin/isomorphism.hpp"
#include "xjoin/report.hpp"

namespace xjoin::cli {
namespace {

enum class OutputFormat { Json, Text, Dot };

struct Options {
  std::optional<InputFormat> input_format;
  std::optional<OutputFormat> output;
  bool oracle = false;
  std::uint64_t seed = 42;
  std::string input = "-";
  std::string second_input;
  std::string spec;
  std::size_t random_count = 0;
  std::size_t random_order = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  int decompose() {
    const auto c = xjoin::decompose(read_graph(opt_.input));
    switch (opt_.output.value_or(OutputFormat::Json)) {
      case OutputFormat::Json:
        out_ << decomposition_json(c).dump() << '\n';
        break;
      case OutputFormat::Text:
        out_ << decomposition_text(c) << '\n';
        break;
      case OutputFormat::Dot:
        out_ << emit_dot(c.quotient, fiber_labels(c));
        break;
    }
    return kOk;
  }

  int aut() {
    const Graph g = read_graph(opt_.input);
    const auto c = xjoin::decompose(g);
    if (c.quotient.order() > SearchLimits{}.max_vertices) {
      err_ << "quotient too large for the colour-preserving search: " << c.quotient.order()
           << " vertices (limit " << SearchLimits{}.max_vertices << ")\n";
      return kSizeLimit;
    }
    const auto group = aut_from_decomposition(c);
    const auto format = no_dot(opt_.output.value_or(OutputFormat::Json), "aut");

    std::optional<BigInt> oracle_order;
    if (opt_.oracle) oracle_order = brute_force_aut(g).order;
    const bool match = !oracle_order || *oracle_order == group.order;

    if (format == OutputFormat::Json) {
      auto report = group_json(group);
      if (oracle_order) {
        report["oracle_order"] = oracle_order->str();
        report["match"] = match;
      }
      out_ << report.dump() << '\n';
    } else {
      out_ << group_text(group);
      if (oracle_order) {
        out_ << "oracle order: " << *oracle_order << '\n'
             << "match: " << (match ? "true" : "false") << '\n';
      }
    }
    return match ? kOk : kOracleMismatch;
  }

  int join() {
    const Graph base = read_graph(opt_.input);
    const auto spec = parse_fiber_spec(opt_.spec);
    if (spec.size() != base.order()) {
      throw UsageError("spec has " + std::to_string(spec.size()) + " tokens for a base of order " +
                       std::to_string(base.order()));
    }
    write_graph(x_join(base, spec).graph);
    return kOk;
  }

  int lexprod() {
    const Graph outer = read_graph(opt_.input);
    const Graph inner = read_graph(opt_.second_input);
    write_graph(lex_product(outer, inner));
    return kOk;
  }

  int roundtrip() {
    const Graph base = read_graph(opt_.input);
    const auto spec = parse_fiber_spec(opt_.spec);
    if (spec.size() != base.order()) {
      throw UsageError("spec has " + std::to_string(spec.size()) + " tokens for a base of order " +
                       std::to_string(base.order()));
    }
    if (!join_is_reduced(base, spec)) {
      throw NotReducedError("not reduced: \"" + format_fiber_spec(spec) +
                            "\" over this base can be coarsened");
    }
    const auto joined = x_join(base, spec);
    const auto c = xjoin::decompose(joined.graph);
    const bool iso = find_isomorphism(base, fiber_labels_of(spec), c.quotient,
                                      fiber_labels_of(c.fibers))
                         .has_value();
    if (no_dot(opt_.output.value_or(OutputFormat::Text), "roundtrip") == OutputFormat::Json) {
      nlohmann::ordered_json report;
      report["join_order"] = joined.graph.order();
      report["quotient_order"] = c.quotient.order();
      report["isomorphic"] = iso;
      out_ << report.dump() << '\n';
    } else {
      out_ << "recovered quotient isomorphic to base: " << (iso ? "true" : "false") << '\n';
    }
    return iso ? kOk : kOracleMismatch;
  }

  int verify() {
    const auto format = no_dot(opt_.output.value_or(OutputFormat::Text), "verify");
    std::vector<Graph> graphs;
    if (opt_.random_count > 0) {
      std::mt19937_64 rng(opt_.seed);
      std::uniform_real_distribution<double> density(0.1, 0.9);
      for (std::size_t i = 0; i < opt_.random_count; ++i) {
        const double p = density(rng);
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < opt_.random_order; ++u) {
          for (Vertex v = u + 1; v < opt_.random_order; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
          }
        }
        graphs.emplace_back(opt_.random_order, edges);
      }
    } else {
      graphs.push_back(read_graph(opt_.input));
    }

    std::size_t failures = 0;
    auto results = nlohmann::ordered_json::array();
    for (const auto& g : graphs) {
      const auto problems = check_graph(g);
      failures += problems.empty() ? 0 : 1;
      if (format == OutputFormat::Json) {
        nlohmann::ordered_json entry;
        entry["graph6"] = emit_graph6(g);
        entry["ok"] = problems.empty();
        entry["problems"] = problems;
        results.push_back(std::move(entry));
      } else {
        out_ << emit_graph6(g) << ": " << (problems.empty() ? "ok" : "FAIL");
        for (const auto& p : problems) out_ << "; " << p;
        out_ << '\n';
      }
    }
    if (format == OutputFormat::Json) {
      nlohmann::ordered_json report;
      report["checked"] = graphs.size();
      report["failures"] = failures;
      report["graphs"] = std::move(results);
      out_ << report.dump() << '\n';
    } else {
      out_ << "checked " << graphs.size() << ", failures " << failures << '\n';
    }
    return failures == 0 ? kOk : kOracleMismatch;
  }

  int oracle() {
    const Graph g = read_graph(opt_.input);
    const auto result = brute_force_aut(g);
    const auto maximal = cem_oracle(g);
    if (no_dot(opt_.output.value_or(OutputFormat::Json), "oracle") == OutputFormat::Json) {
      nlohmann::ordered_json report;
      report["order"] = result.order.str();
      auto gens = nlohmann::ordered_json::array();
      for (const auto& p : result.generators) {
        gens.push_back(std::vector<Vertex>(p.images().begin(), p.images().end()));
      }
      report["generators"] = std::move(gens);
      auto sets = nlohmann::ordered_json::array();
      for (const auto& s : maximal) sets.push_back(std::vector<Vertex>(s.begin(), s.end()));
      report["cem_maximal"] = std::move(sets);
      out_ << report.dump() << '\n';
    } else {
      out_ << "order: " << result.order << "\ngenerators:";
      for (const auto& p : result.generators) out_ << ' ' << to_cycle_string(p);
      out_ << "\nmaximal CE_m sets:";
      for (const auto& s : maximal) {
        out_ << " {";
        for (std::size_t i = 0; i < s.size(); ++i) out_ << (i ? "," : "") << s[i];
        out_ << '}';
      }
      out_ << '\n';
    }
    return kOk;
  }

 private:
  static std::vector<std::uint64_t> fiber_labels_of(std::span<const Fiber> fibers) {
    std::vector<std::uint64_t> labels;
    for (const auto& f : fibers) {
      labels.push_back(f.size * 4 + static_cast<std::uint64_t>(f.kind));
    }
    return labels;
  }

  static OutputFormat no_dot(OutputFormat f, const std::string& command) {
    if (f == OutputFormat::Dot) throw UsageError("dot output is not available for " + command);
    return f;
  }

  // Decomposition and group-structure cross-checks for one graph; returns
  // the list of failed checks.
  static std::vector<std::string> check_graph(const Graph& g) {
    std::vector<std::string> problems;
    const auto c = xjoin::decompose(g);
    for (const auto& cls : c.partition.classes) {
      const bool shape = cls.kind == FiberKind::Clique ? is_clique(g, cls.vertices)
                                                       : is_independent(g, cls.vertices);
      if (!shape) problems.push_back("class is not " + std::string(to_string(cls.kind)));
      if (!externally_related(g, cls.vertices)) problems.push_back("class not externally related");
    }
    if (!is_reduced(c)) problems.push_back("not reduced");
    const auto group = aut_from_decomposition(c);
    const auto oracle = brute_force_aut(g);
    if (group.order != oracle.order) {
      problems.push_back("order " + group.order.str() + " != oracle " + oracle.order.str());
    }
    for (const auto* list : {&group.kernel_generators, &group.complement_generators}) {
      for (const auto& p : *list) {
        if (!verify_automorphism(g, p)) problems.push_back("generator is not an automorphism");
      }
    }
    for (const auto& s : group.complement_generators) {
      for (const auto& t : group.kernel_generators) {
        if (!fixes_fibers_setwise(s * t * s.inverse(), c.class_of)) {
          problems.push_back("conjugated kernel generator leaves the kernel");
        }
      }
    }
    return problems;
  }

  Graph read_graph(const std::string& source) {
    std::string text;
    if (source == "-") {
      if (stdin_used_) throw UsageError("standard input can only be read once");
      stdin_used_ = true;
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream file(source, std::ios::binary);
      if (!file) throw UsageError("cannot open " + source);
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_graph(text, opt_.input_format);
  }

  void write_graph(const Graph& g) {
    if (!opt_.output) {
      out_ << emit_graph6(g) << '\n';
      return;
    }
    switch (*opt_.output) {
      case OutputFormat::Json: {
        nlohmann::ordered_json report;
        report["n"] = g.order();
        auto edges = nlohmann::ordered_json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        report["edges"] = std::move(edges);
        report["graph6"] = emit_graph6(g);
        out_ << report.dump() << '\n';
        break;
      }
      case OutputFormat::Text:
        out_ << emit_edge_list(g);
        break;
      case OutputFormat::Dot:
        out_ << emit_dot(g);
        break;
    }
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool stdin_used_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Complete-empty X-join decomposition and automorphism groups", "xjoin"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, InputFormat> input_formats{{"graph6", InputFormat::Graph6},
                                                         {"edgelist", InputFormat::EdgeList}};
  const std::map<std::string, OutputFormat> output_formats{
      {"json", OutputFormat::Json}, {"text", OutputFormat::Text}, {"dot", OutputFormat::Dot}};
  app.add_option("--format", opt.input_format, "Input format (default: auto-detect)")
      ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
  app.add_option("-o,--output", opt.output, "Output format")
      ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
  app.add_option("--seed", opt.seed, "Seed for sampled graphs")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "Twin classes, quotient and reducedness");
  decompose->add_option("input", opt.input, "Graph file or - for stdin");

  auto* aut = app.add_subcommand("aut", "Automorphism group via the decomposition");
  aut->add_option("input", opt.input, "Graph file or - for stdin");
  aut->add_flag("--oracle", opt.oracle, "Cross-check the order by exhaustive search");

  auto* join = app.add_subcommand("join", "Build the X-join of a base graph");
  join->add_option("base", opt.input, "Base graph file or -")->required();
  join->add_option("spec", opt.spec, "Fiber tokens, e.g. \"i3 i3\"")->required();

  auto* lexprod = app.add_subcommand("lexprod", "Lexicographic product X o Y");
  lexprod->add_option("x", opt.input, "Outer graph file or -")->required();
  lexprod->add_option("y", opt.second_input, "Inner graph file or -")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Join, decompose and compare with the base");
  roundtrip->add_option("base", opt.input, "Base graph file or -")->required();
  roundtrip->add_option("spec", opt.spec, "Fiber tokens, e.g. \"c2 c2 c2\"")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check decomposition and group against the oracle");
  verify->add_option("input", opt.input, "Graph file or - for stdin");
  verify->add_option("--random", opt.random_count, "Check this many seeded random graphs instead");
  verify->add_option("--order", opt.random_order, "Order of the random graphs")
      ->capture_default_str()
      ->check(CLI::Range(1, 12));

  auto* oracle = app.add_subcommand("oracle", "Brute-force automorphism group and CE_m sets");
  oracle->add_option("input", opt.input, "Graph file or - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Session session(opt, in, out, err);
  try {
    if (*decompose) return session.decompose();
    if (*aut) return session.aut();
    if (*join) return session.join();
    if (*lexprod) return session.lexprod();
    if (*roundtrip) return session.roundtrip();
    if (*verify) return session.verify();
    if (*oracle) return session.oracle();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NotReducedError& e) {
    err << e.what() << '\n';
    return kNotReduced;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return kInternalError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace xjoin::cli
