#include <json.hpp>

#include "docclust/error.hpp"
#include "docclust/vector_space.hpp"
#include "io_util.hpp"

namespace docclust {

namespace {

constexpr int kExportDigits = 9;

double export_rounded(double w) {
  return detail::parse_double(detail::format_significant(w, kExportDigits));
}

}  // namespace

std::string matrix_to_csv(const TermDocumentMatrix& matrix) {
  std::string out = "doc_id";
  for (const auto& term : matrix.terms()) {
    out += ',';
    out += detail::csv_escape(term);
  }
  out += '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    out += detail::csv_escape(matrix.row_ids()[r]);
    for (double w : matrix.row(r)) {
      out += ',';
      out += detail::format_significant(w, kExportDigits);
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const TermDocumentMatrix& matrix) {
  nlohmann::ordered_json j;
  j["scheme"] = scheme_name(matrix.scheme());
  j["documents"] = matrix.row_ids();
  j["terms"] = matrix.terms();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (double w : matrix.row(r)) row.push_back(export_rounded(w));
    rows.push_back(std::move(row));
  }
  j["weights"] = std::move(rows);
  return j.dump(1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

TermDocumentMatrix matrix_from_csv(std::string_view csv, WeightingScheme scheme) {
  const auto records = detail::parse_csv(csv);
  if (records.empty() || records.front().empty() || records.front().front() != "doc_id") {
    throw Error(ErrorCode::ParseError, "matrix CSV must start with a 'doc_id' header");
  }
  std::vector<std::string> terms(records.front().begin() + 1, records.front().end());
  std::vector<std::string> ids;
  std::vector<double> weights;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() != terms.size() + 1) {
      throw Error(ErrorCode::ParseError, "matrix CSV row " + std::to_string(i) + " has " +
                                             std::to_string(rec.size()) + " fields, expected " +
                                             std::to_string(terms.size() + 1));
    }
    ids.push_back(rec.front());
    for (std::size_t c = 1; c < rec.size(); ++c) weights.push_back(detail::parse_double(rec[c]));
  }
  return TermDocumentMatrix(std::move(ids), std::move(terms), std::move(weights), scheme);
}

TermDocumentMatrix matrix_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (!scheme) throw Error(ErrorCode::ParseError, "unknown weighting scheme in matrix JSON");
    auto ids = j.at("documents").get<std::vector<std::string>>();
    auto terms = j.at("terms").get<std::vector<std::string>>();
    const auto& rows = j.at("weights");
    if (rows.size() != ids.size()) {
      throw Error(ErrorCode::ParseError, "matrix JSON row count does not match documents");
    }
    std::vector<double> weights;
    weights.reserve(ids.size() * terms.size());
    for (const auto& row : rows) {
      if (row.size() != terms.size()) {
        throw Error(ErrorCode::ParseError, "matrix JSON row width does not match terms");
      }
      for (const auto& w : row) weights.push_back(w.get<double>());
    }
    return TermDocumentMatrix(std::move(ids), std::move(terms), std::move(weights), *scheme);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace docclust
