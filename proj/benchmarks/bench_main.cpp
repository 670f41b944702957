#include <benchmark/benchmark.h>

#include "docclust/kmedoids.hpp"
#include "docclust/summarizer.hpp"
#include "synthetic_corpus.hpp"

namespace {

using namespace docclust;

testing::SyntheticSpec spec_for(std::int64_t docs_per_domain) {
  testing::SyntheticSpec spec;
  spec.docs_per_domain = static_cast<std::size_t>(docs_per_domain);
  spec.words_per_doc = 200;
  return spec;
}

void BM_Pipeline(benchmark::State& state) {
  const auto raw = testing::make_synthetic_texts(spec_for(state.range(0)));
  const TextPipeline pipeline;
  std::size_t bytes = 0;
  for (const auto& r : raw) bytes += r.text.size();
  for (auto _ : state) {
    benchmark::DoNotOptimize(testing::to_documents(raw, pipeline));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_Pipeline)->Arg(20)->Arg(100);

void BM_BuildMatrix(benchmark::State& state) {
  const auto docs =
      testing::to_documents(testing::make_synthetic_texts(spec_for(state.range(0))), TextPipeline());
  for (auto _ : state) {
    const Vocabulary vocab = build_vocabulary(docs);
    benchmark::DoNotOptimize(build_matrix(docs, vocab, WeightingScheme::TfIdf));
  }
}
BENCHMARK(BM_BuildMatrix)->Arg(20)->Arg(100);

void BM_DistanceMatrix(benchmark::State& state) {
  const auto docs =
      testing::to_documents(testing::make_synthetic_texts(spec_for(state.range(0))), TextPipeline());
  const auto matrix = build_matrix(docs, build_vocabulary(docs), WeightingScheme::TfRatio);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DistanceMatrix::build(matrix));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(20)->Arg(100);

void BM_Cluster(benchmark::State& state) {
  const auto docs =
      testing::to_documents(testing::make_synthetic_texts(spec_for(state.range(0))), TextPipeline());
  const auto matrix = build_matrix(docs, build_vocabulary(docs), WeightingScheme::TfRatio);
  const auto distances = DistanceMatrix::build(matrix);
  ClusterOptions opts;
  opts.k = 5;
  opts.init.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster(distances, opts));
  }
}
BENCHMARK(BM_Cluster)->Arg(20)->Arg(100);

void BM_SummarizeCorpus(benchmark::State& state) {
  const TextPipeline pipeline;
  const auto docs = testing::to_documents(testing::make_synthetic_texts(spec_for(20)), pipeline);
  const Vocabulary vocab = build_vocabulary(docs);
  const auto matrix = build_matrix(docs, vocab, WeightingScheme::TfRatio);
  const Summarizer summarizer(matrix, vocab, pipeline);
  for (auto _ : state) {
    for (const auto& doc : docs) benchmark::DoNotOptimize(summarizer.summarize_document(doc, 3));
  }
}
BENCHMARK(BM_SummarizeCorpus);

}  // namespace

BENCHMARK_MAIN();
