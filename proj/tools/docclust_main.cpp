// docclust: batch front end for the document clustering pipeline.
//
//   docclust <cluster|evaluate|summarize|export-matrix|compare-schemes> --corpus DIR [options]
//
// Exit status: 0 success, 1 I/O, 2 config or precondition, 3 internal error.
// Failures print one line to stderr: "error: <Category>: <message>".

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "docclust/error.hpp"
#include "docclust/pipeline.hpp"

namespace {

int report_error(std::string_view category, std::string_view message, int status) {
  std::string line(message);
  for (char& c : line) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::cerr << "error: " << category << ": " << line << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Document clustering with K-Medoids over TF / TF-IDF term weights", "docclust"};
  app.set_config("--config", "", "Flat key=value file; command line flags override it");
  app.require_subcommand(1);

  std::string corpus;
  std::string scheme = "tf";
  std::size_t k = 5;
  std::uint64_t seed = 0;
  std::string init = "random";
  std::string stopwords;
  std::string stem_exceptions;
  std::size_t max_iters = 0;
  std::size_t summary_n = 3;
  std::string out = "out";
  unsigned threads = 1;
  std::string metric = "manhattan";
  std::string score_mode = "mean";

  app.add_option("--corpus", corpus, "Corpus directory (<domain>/<doc>.txt or flat <doc>.txt)");
  app.add_option("--scheme", scheme, "Weighting scheme")
      ->check(CLI::IsMember({"tf", "tfidf"}))
      ->capture_default_str();
  app.add_option("--k", k, "Number of clusters")->capture_default_str();
  app.add_option("--seed", seed, "Seed for random medoid initialization")->capture_default_str();
  app.add_option("--init", init, "Medoid initialization")
      ->check(CLI::IsMember({"random", "stratified"}))
      ->capture_default_str();
  app.add_option("--stopwords", stopwords, "Stopword file (one word per line, '#' comments)");
  app.add_option("--stem-exceptions", stem_exceptions,
                 "Stem restore table (stripped<TAB>restored per line)");
  app.add_option("--max-iters", max_iters, "Cap on accepted swaps (default 10 x documents)");
  app.add_option("--summary-n", summary_n, "Sentences per document in summaries")
      ->capture_default_str();
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->capture_default_str();
  app.add_option("--metric", metric, "Distance (euclidean is a non-default extension)")
      ->check(CLI::IsMember({"manhattan", "euclidean"}))
      ->capture_default_str();
  app.add_option("--score-mode", score_mode, "Sentence score: mean or raw sum of term weights")
      ->check(CLI::IsMember({"mean", "sum"}))
      ->capture_default_str();

  const std::map<std::string, std::string> commands{
      {"cluster", "Full pipeline: matrix, clustering, evaluation (labeled corpora), summaries"},
      {"evaluate", "Cluster and write the per-cluster observation table"},
      {"summarize", "Cluster and write extractive summaries per cluster"},
      {"export-matrix", "Write the term-document matrix as CSV and JSON"},
      {"compare-schemes", "Cluster under TF and TF-IDF and compare efficiencies"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("InvalidConfig", e.what(), 2);
  }

  try {
    const std::string command_text = app.get_subcommands().front()->get_name();
    const auto command = docclust::parse_command(command_text);

    docclust::RunConfig config;
    config.corpus_path = corpus;
    config.scheme = *docclust::parse_scheme(scheme);
    config.k = k;
    config.seed = seed;
    config.init = *docclust::parse_init(init);
    if (!stopwords.empty()) config.stopword_path = stopwords;
    if (!stem_exceptions.empty()) config.stem_exceptions_path = stem_exceptions;
    if (max_iters > 0) config.max_iterations = max_iters;
    config.summary_n = summary_n;
    config.output_dir = out;
    config.threads = threads;
    config.metric = *docclust::parse_metric(metric);
    config.score_mode = score_mode == "sum" ? docclust::ScoreMode::Sum : docclust::ScoreMode::Mean;

    const auto result = docclust::run(*command, config);
    for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
    for (const auto& artifact : result.artifacts) {
      std::cout << (config.output_dir / artifact).generic_string() << '\n';
    }
    return 0;
  } catch (const docclust::Error& e) {
    return report_error(docclust::error_name(e.code()), e.what(), docclust::exit_status(e.code()));
  } catch (const std::exception& e) {
    return report_error("Internal", e.what(), 3);
  }
}
