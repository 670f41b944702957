#include "docclust/error.hpp"
#include "docclust/evaluation.hpp"
#include "docclust/pipeline.hpp"
#include "docclust/report.hpp"
#include "io_util.hpp"

namespace docclust {

namespace fs = std::filesystem;

std::string_view command_name(Command command) noexcept {
  switch (command) {
    case Command::Cluster: return "cluster";
    case Command::Evaluate: return "evaluate";
    case Command::Summarize: return "summarize";
    case Command::ExportMatrix: return "export-matrix";
    case Command::CompareSchemes: return "compare-schemes";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::Cluster, Command::Evaluate, Command::Summarize, Command::ExportMatrix,
                    Command::CompareSchemes}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

void RunConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (k < 1) bad("k must be >= 1");
  if (summary_n < 1) bad("summary-n must be >= 1");
  if (threads < 1) bad("threads must be >= 1");
  if (max_iterations && *max_iterations < 1) bad("max-iters must be >= 1");
  if (corpus_path.empty()) bad("no corpus path given");
  std::error_code ec;
  if (!fs::is_directory(corpus_path, ec)) bad("corpus path is not a directory: " + corpus_path.string());
  if (stopword_path && !fs::is_regular_file(*stopword_path, ec)) {
    bad("stopword file does not exist: " + stopword_path->string());
  }
  if (stem_exceptions_path && !fs::is_regular_file(*stem_exceptions_path, ec)) {
    bad("stem exception file does not exist: " + stem_exceptions_path->string());
  }
  if (output_dir.empty()) bad("no output directory given");
}

namespace {

class ArtifactWriter {
 public:
  ArtifactWriter(fs::path root, RunResult& result) : root_(std::move(root)), result_(result) {}

  void write(const fs::path& relative, std::string_view contents) {
    detail::write_text_file(root_ / relative, contents);
    result_.artifacts.push_back(relative);
  }

 private:
  fs::path root_;
  RunResult& result_;
};

void require_labels(std::span<const Document> documents, Command command) {
  for (const auto& d : documents) {
    if (!d.label) {
      throw Error(ErrorCode::UnlabeledDocument,
                  std::string(command_name(command)) + " needs a labeled corpus; '" + d.id +
                      "' is not inside a domain directory");
    }
  }
}

}  // namespace

RunResult run(Command command, const RunConfig& config) {
  config.validate();

  const TextPipeline pipeline(
      config.stopword_path ? StopwordList::from_file(*config.stopword_path)
                           : StopwordList::builtin(),
      config.stem_exceptions_path ? StemExceptions::from_file(*config.stem_exceptions_path)
                                  : StemExceptions::builtin());
  const std::vector<Document> documents = ingest_corpus(config.corpus_path, pipeline);
  const auto labels = labels_of(documents);
  const bool labeled = fully_labeled(documents);

  ClusterOptions options;
  options.k = config.k;
  options.init = InitStrategy{config.init, config.seed};
  options.max_iterations = config.max_iterations;
  options.threads = config.threads;

  RunResult result;
  ArtifactWriter out(config.output_dir, result);

  if (command == Command::CompareSchemes) {
    require_labels(documents, command);
    const auto cmp = compare_schemes(documents, options, config.metric);
    out.write("observation_table_tf.txt", table_to_text(cmp.tf_table));
    out.write("observation_table_tf.csv", table_to_csv(cmp.tf_table));
    out.write("observation_table_tfidf.txt", table_to_text(cmp.tfidf_table));
    out.write("observation_table_tfidf.csv", table_to_csv(cmp.tfidf_table));
    out.write("scheme_comparison.json", comparison_to_json(cmp));
    return result;
  }
  if (command == Command::Evaluate) require_labels(documents, command);

  const Vocabulary vocab = build_vocabulary(documents);
  const TermDocumentMatrix matrix = build_matrix(documents, vocab, config.scheme, config.threads);

  if (command == Command::ExportMatrix || command == Command::Cluster) {
    out.write("matrix.csv", matrix_to_csv(matrix));
    out.write("matrix.json", matrix_to_json(matrix));
  }
  if (command == Command::ExportMatrix) return result;

  const DistanceMatrix distances = DistanceMatrix::build(matrix, config.metric, config.threads);
  const Clustering clustering = cluster(distances, options, LabelView(labels));
  verify_clustering(distances, clustering);
  if (!clustering.converged) {
    result.notes.push_back("stopped after " + std::to_string(clustering.iterations) +
                           " swaps without converging");
  }
  out.write("clustering.json",
            report_to_json(make_report(clustering, distances, matrix.row_ids(), config.scheme,
                                       config.seed)));

  if (command == Command::Evaluate || command == Command::Cluster) {
    if (labeled) {
      const auto table = observation_table(clustering, labels, config.scheme);
      out.write("observation_table.txt", table_to_text(table));
      out.write("observation_table.csv", table_to_csv(table));
    } else {
      result.notes.push_back("corpus has unlabeled documents; evaluation skipped");
    }
  }

  if (command == Command::Summarize || command == Command::Cluster) {
    const Summarizer summarizer(matrix, vocab, pipeline, config.score_mode);
    for (std::size_t c = 0; c < clustering.k(); ++c) {
      const auto members = clustering.members(c);
      const Summary summary = summarizer.summarize_cluster(documents, members, config.summary_n);
      const std::string stem = "summaries/cluster_" + std::to_string(c);
      out.write(stem + ".txt", summary_to_text(summary));
      out.write(stem + ".json", summary_to_json(summary));
    }
  }
  return result;
}

}  // namespace docclust
