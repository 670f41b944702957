#include <algorithm>

#include "docclust/error.hpp"
#include "docclust/pipeline.hpp"
#include "io_util.hpp"

namespace docclust {

namespace fs = std::filesystem;

std::vector<Document> ingest_corpus(const fs::path& root, const TextPipeline& pipeline) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::InvalidConfig, "corpus path is not a directory: " + root.string());
  }

  struct Entry {
    std::string id;
    fs::path path;
    std::optional<std::string> label;
  };
  std::vector<Entry> entries;
  fs::recursive_directory_iterator it(root, fs::directory_options::follow_directory_symlink, ec);
  if (ec) {
    throw Error(ErrorCode::UnreadableFile, "cannot list " + root.string() + ": " + ec.message());
  }
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      throw Error(ErrorCode::UnreadableFile, "cannot list " + root.string() + ": " + ec.message());
    }
    if (!it->is_regular_file(ec) || it->path().extension() != ".txt") continue;
    const fs::path rel = it->path().lexically_relative(root);
    Entry e;
    e.id = rel.generic_string();
    e.path = it->path();
    if (std::distance(rel.begin(), rel.end()) > 1) e.label = rel.begin()->string();
    entries.push_back(std::move(e));
  }
  if (entries.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "no .txt documents under " + root.string());
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });

  std::vector<Document> documents;
  documents.reserve(entries.size());
  for (auto& e : entries) {
    documents.push_back(
        pipeline.make_document(std::move(e.id), std::move(e.label), detail::read_text_file(e.path)));
  }
  return documents;
}

bool fully_labeled(std::span<const Document> documents) {
  return std::all_of(documents.begin(), documents.end(),
                     [](const Document& d) { return d.label.has_value(); });
}

}  // namespace docclust
