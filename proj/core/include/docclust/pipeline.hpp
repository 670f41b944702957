#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docclust/kmedoids.hpp"
#include "docclust/summarizer.hpp"
#include "docclust/text_pipeline.hpp"
#include "docclust/vector_space.hpp"

namespace docclust {

/// Reads every *.txt file below `root`, in lexicographic order of the
/// relative path (the document id, '/'-separated).
///
/// Files inside a subdirectory are labeled with the name of the top-level
/// directory they sit in (root/<label>/.../<doc>.txt); files directly in
/// `root` are unlabeled.
///
/// Throws Error(InvalidConfig) if `root` is not a directory,
/// Error(EmptyCorpus) if it has no .txt files and Error(UnreadableFile) for
/// the first file that cannot be read.
std::vector<Document> ingest_corpus(const std::filesystem::path& root,
                                    const TextPipeline& pipeline);

bool fully_labeled(std::span<const Document> documents);

enum class Command { Cluster, Evaluate, Summarize, ExportMatrix, CompareSchemes };

std::string_view command_name(Command command) noexcept;
std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
  std::filesystem::path corpus_path;
  WeightingScheme scheme = WeightingScheme::TfRatio;
  std::size_t k = 5;
  std::uint64_t seed = 0;
  InitKind init = InitKind::RandomSeeded;
  std::optional<std::filesystem::path> stopword_path;
  std::optional<std::filesystem::path> stem_exceptions_path;
  std::optional<std::size_t> max_iterations;  // default 10 x document count
  std::size_t summary_n = 3;
  std::filesystem::path output_dir = "out";
  unsigned threads = 1;
  DistanceMetric metric = DistanceMetric::Manhattan;
  ScoreMode score_mode = ScoreMode::Mean;

  /// Throws Error(InvalidConfig) for k == 0, summary_n == 0, threads == 0,
  /// max_iterations == 0 or input paths that do not exist.
  void validate() const;
};

struct RunResult {
  std::vector<std::filesystem::path> artifacts;  // relative to output_dir, in write order
  std::vector<std::string> notes;                // human-readable remarks (skipped stages)
};

/// Executes one subcommand end to end and writes its artifacts:
///
///   export-matrix    matrix.csv, matrix.json
///   cluster          matrix.*, clustering.json, observation_table.* (labeled
///                    corpora only), summaries/cluster_<n>.{txt,json}
///   evaluate         clustering.json, observation_table.{txt,csv}
///   summarize        clustering.json, summaries/cluster_<n>.{txt,json}
///   compare-schemes  observation_table_{tf,tfidf}.{txt,csv}, scheme_comparison.json
///
/// Identical corpus bytes and config give byte-identical artifacts.
RunResult run(Command command, const RunConfig& config);

}  // namespace docclust
