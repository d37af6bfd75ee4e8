#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "walkiso/cli.hpp"

namespace {

using walkiso::cli::FormatChoice;

const std::map<std::string, FormatChoice> kFormats = {
    {"auto", FormatChoice::Auto},         {"graph6", FormatChoice::Graph6},
    {"g6", FormatChoice::Graph6},         {"edgelist", FormatChoice::EdgeList},
    {"edge-list", FormatChoice::EdgeList}};

const std::map<std::string, walkiso::TraceLevel> kTraceLevels = {
    {"summary", walkiso::TraceLevel::Summary},
    {"multiplicities", walkiso::TraceLevel::Multiplicities},
    {"full", walkiso::TraceLevel::Full}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph isomorphism testing by closed-walk diagonal refinement"};
  app.set_version_flag("--version", walkiso::cli::kVersion);
  app.require_subcommand(1);

  walkiso::cli::TestArgs test;
  auto* test_cmd = app.add_subcommand("test", "Run the diagonal-refinement test on two graphs");
  test_cmd->add_option("g1", test.g1_path, "First graph file ('-' for stdin)")->required();
  test_cmd->add_option("g2", test.g2_path, "Second graph file")->required();
  test_cmd->add_option("--format", test.format, "Input format: auto, graph6, edgelist")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  test_cmd->add_flag("--early-exit", test.config.early_exit,
                     "Stop once block sizes stop changing (benchmarking only)");
  test_cmd->add_flag("--audit", test.config.audit_with_oracle,
                     "Cross-check isomorphic verdicts with the exact oracle");
  test_cmd->add_option("--audit-max-n", test.config.audit_max_n, "Largest n audited by the oracle");
  test_cmd->add_option("--budget", test.config.oracle_budget, "Oracle node budget for --audit");
  test_cmd->add_option("--trace", test.config.trace, "Trace level: summary, multiplicities, full")
      ->transform(CLI::CheckedTransformer(kTraceLevels, CLI::ignore_case));

  walkiso::cli::OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact backtracking isomorphism test");
  oracle_cmd->add_option("g1", oracle.g1_path, "First graph file")->required();
  oracle_cmd->add_option("g2", oracle.g2_path, "Second graph file")->required();
  oracle_cmd->add_option("--format", oracle.format, "Input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  oracle_cmd->add_option("--budget", oracle.budget, "Search node budget");

  walkiso::cli::HuntArgs hunt;
  std::string corpus, gen;
  auto* hunt_cmd = app.add_subcommand("hunt", "Audit the test against the oracle over many pairs");
  auto* corpus_opt = hunt_cmd->add_option("--corpus", corpus, "graph6 corpus file; all same-n pairs");
  auto* gen_opt = hunt_cmd->add_option("--gen", gen, "Generator spec, e.g. permuted:n=10,count=100,seed=1");
  corpus_opt->excludes(gen_opt);
  hunt_cmd->add_option("--audit-max-n", hunt.options.audit_max_n, "Largest n checked by the oracle");
  hunt_cmd->add_option("--budget", hunt.options.budget, "Oracle node budget per pair");
  hunt_cmd->add_option("--jobs", hunt.jobs, "Worker threads (default: $WALKISO_JOBS or all cores)");
  hunt_cmd->add_option("--persist", hunt.persist_path, "File receiving disagreement records");
  hunt_cmd->add_option("--manifest", hunt.manifest_path, "Write a run manifest to this file");
  hunt_cmd->add_flag("--skip-bad-lines", hunt.skip_bad_lines, "Warn about malformed corpus lines instead of failing");
  hunt_cmd->add_flag("--only-problems", hunt.only_problems, "Stream only non-agreement records");

  walkiso::cli::BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts on random regular permuted pairs");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest n")->required();
  bench_cmd->add_option("--n-max", bench.n_max, "Largest n (n doubles from n-min)")->required();
  bench_cmd->add_option("--samples", bench.samples, "Instances per n")->required();
  bench_cmd->add_option("--degree", bench.degree, "Degree of the regular instances");
  bench_cmd->add_option("--seed", bench.seed, "Run seed");
  bench_cmd->add_flag("--early-exit", bench.early_exit, "Benchmark the early-exit variant");

  walkiso::cli::ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge-list text");
  convert_cmd->add_option("--from", convert.from, "Input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  convert_cmd->add_option("--to", convert.to, "Output format")
      ->required()
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  convert_cmd->add_option("-i,--input", convert.input, "Input file ('-' for stdin)");
  convert_cmd->add_option("-o,--output", convert.output, "Output file ('-' for stdout)");

  walkiso::cli::ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "Probe random distinct matrix pairs for equal power diagonals");
  probe_cmd->add_option("--trials", probe.trials, "Number of pairs");
  probe_cmd->add_option("--seed", probe.seed, "Run seed");
  probe_cmd->add_option("--max-n", probe.max_n, "Largest matrix dimension");
  probe_cmd->add_option("--jobs", probe.jobs, "Worker threads");
  probe_cmd->add_option("--persist", probe.persist_path, "File receiving falsification events");

  walkiso::cli::GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph6 corpus");
  generate_cmd->add_option("--gen", generate.gen, "Generator spec")->required();
  generate_cmd->add_option("-o,--output", generate.output, "graph6 output file");
  generate_cmd->add_option("--manifest", generate.manifest_path, "JSON-lines manifest output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : walkiso::cli::kError;
  }

  if (*test_cmd) return walkiso::cli::cmd_test(test, std::cout, std::cerr);
  if (*oracle_cmd) return walkiso::cli::cmd_oracle(oracle, std::cout, std::cerr);
  if (*hunt_cmd) {
    if (*corpus_opt) hunt.corpus = corpus;
    if (*gen_opt) hunt.gen = gen;
    hunt.argv.assign(argv, argv + argc);
    return walkiso::cli::cmd_hunt(hunt, std::cout, std::cerr);
  }
  if (*bench_cmd) return walkiso::cli::cmd_bench(bench, std::cout, std::cerr);
  if (*convert_cmd) return walkiso::cli::cmd_convert(convert, std::cin, std::cout, std::cerr);
  if (*probe_cmd) return walkiso::cli::cmd_probe(probe, std::cout, std::cerr);
  if (*generate_cmd) return walkiso::cli::cmd_generate(generate, std::cout, std::cerr);
  return walkiso::cli::kError;
}
