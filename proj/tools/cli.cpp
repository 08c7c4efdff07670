#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tigen/codecs.hpp"
#include "tigen/oracle.hpp"
#include "tigen/parallel.hpp"
#include "tigen/ti_generation.hpp"

namespace tigen::cli {

namespace {

constexpr std::size_t kFlushBytes = 1 << 20;

oracle::AdjacencyTree to_adjacency(const WtiTree& tree) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : to_edge_list(tree)) edges.emplace_back(e.u, e.v);
  return oracle::AdjacencyTree(tree.order(), edges);
}

std::string encode(const WtiTree& tree, Mode mode) {
  switch (mode) {
    case Mode::kGraph6:
      return encode_graph6(to_edge_list(tree), tree.order()).bytes;
    case Mode::kSparse6:
      return encode_sparse6(to_edge_list(tree), tree.order()).bytes;
    default:
      return encode_parent_list(tree).bytes;
  }
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err) {
  CLI::App app{"Generates all transmission irregular trees up to a given order."};
  app.name(argc > 0 ? argv[0] : "tigen");

  RunConfig config;
  config.threads = default_thread_count();
  bool count = false, graph6 = false, sparse6 = false, parents = false, verify = false;
  auto* modes = app.add_option_group("mode", "exactly one output mode");
  modes->add_flag("-c,--count", count, "print the number of trees of each order");
  modes->add_flag("-g,--graph6", graph6, "print every tree in graph6 format");
  modes->add_flag("-s,--sparse6", sparse6, "print every tree in sparse6 format");
  modes->add_flag("-p,--parents", parents, "print the parent of each non-root vertex");
  modes->add_flag("-v,--verify", verify, "compare the generator with the brute-force oracle");
  modes->require_option(1);

  app.add_option("n_max", config.n_max, "maximum tree order")->required()->check(CLI::Range(1, kMaxOrder));
  int degree = 0;
  auto* degree_opt = app.add_option("m", degree, "maximum vertex degree (default: unbounded)")
                         ->check(CLI::PositiveNumber);
  app.add_option("-t,--threads", config.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("-d,--deterministic", config.deterministic,
               "single-threaded run with a fixed output order");
  app.add_flag("--verify-against-oracle", config.verify_against_oracle,
               "after the run, cross-check every order against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  if (graph6) config.mode = Mode::kGraph6;
  if (sparse6) config.mode = Mode::kSparse6;
  if (parents) config.mode = Mode::kParentList;
  if (verify) config.mode = Mode::kVerify;
  if (count) config.mode = Mode::kCount;
  if (degree_opt->count() > 0) config.max_degree = degree;

  if (auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return kExitUsage;
  }
  return config;
}

std::optional<std::string> validate(const RunConfig& config) {
  if (config.n_max < 1 || config.n_max > kMaxOrder) {
    return "maximum order must lie in [1, " + std::to_string(kMaxOrder) + "]";
  }
  if (config.max_degree && *config.max_degree < 2) return "maximum degree must be at least 2";
  if ((config.mode == Mode::kVerify || config.verify_against_oracle) &&
      config.n_max > oracle::kMaxOracleOrder) {
    return "oracle verification supports orders up to " + std::to_string(oracle::kMaxOracleOrder);
  }
  if (config.threads < 1) return "thread count must be positive";
  return std::nullopt;
}

std::vector<OrderAgreement> verify_against_oracle(int n_max, std::optional<int> max_degree,
                                                  unsigned threads) {
  const int m = max_degree.value_or(std::max(n_max - 1, 1));

  std::map<int, std::vector<std::string>> generated;
  TiGenerationOptions options;
  options.threads = threads;
  generate_ti_trees(
      n_max, max_degree,
      [&](const WtiTree& tree) {
        generated[tree.order()].push_back(oracle::canonical_form(to_adjacency(tree)));
      },
      options);

  std::vector<OrderAgreement> report;
  for (int k = 1; k <= n_max; ++k) {
    std::vector<std::string> expected;
    oracle::enumerate_free_trees(k, [&](const oracle::AdjacencyTree& tree) {
      if (oracle::max_degree(tree) <= m && oracle::is_ti_graph(tree)) {
        expected.push_back(oracle::canonical_form(tree));
      }
    });
    auto& got = generated[k];
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    report.push_back({k, got.size(), expected.size(), got == expected});
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return kExitUsage;
  }

  TiGenerationOptions options;
  options.threads = config.threads;
  options.deterministic = config.deterministic;
  const unsigned threads = config.deterministic ? 1u : config.threads;

  int status = kExitOk;
  if (config.mode == Mode::kVerify) {
    for (const OrderAgreement& row : verify_against_oracle(config.n_max, config.max_degree, threads)) {
      out << row.order << ' ' << row.generated << ' ' << row.expected << ' '
          << (row.match ? "ok" : "MISMATCH") << '\n';
      if (!row.match) status = kExitMismatch;
    }
  } else if (config.mode == Mode::kCount) {
    const TiCensus census = generate_ti_trees(config.n_max, config.max_degree, {}, options);
    for (int k = 1; k <= config.n_max; ++k) out << k << ' ' << census[k] << '\n';
  } else {
    std::string buffer;
    bool io_failed = false;
    auto flush = [&] {
      out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
      if (!out) io_failed = true;
    };
    generate_ti_trees(
        config.n_max, config.max_degree,
        [&](const WtiTree& tree) {
          buffer += encode(tree, config.mode);
          buffer += '\n';
          if (buffer.size() >= kFlushBytes && !io_failed) flush();
        },
        options);
    if (!io_failed) flush();
  }

  out.flush();
  if (!out) {
    err << "error: failed writing output\n";
    return kExitIo;
  }

  if (config.verify_against_oracle && config.mode != Mode::kVerify) {
    for (const OrderAgreement& row : verify_against_oracle(config.n_max, config.max_degree, threads)) {
      if (!row.match) {
        err << "oracle mismatch at order " << row.order << ": generated " << row.generated
            << ", expected " << row.expected << '\n';
        status = kExitMismatch;
      }
    }
    if (status == kExitOk) err << "oracle agreement on all orders up to " << config.n_max << '\n';
  }
  return status;
}

}  // namespace tigen::cli
