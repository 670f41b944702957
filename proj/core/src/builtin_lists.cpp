#include "docclust/text_pipeline.hpp"

#include <array>

// Mirrors data/stopwords.txt and data/stem_exceptions.tsv; a unit test keeps them in sync.

namespace docclust::detail {

namespace {

constexpr std::array<std::string_view, 147> kStopwords = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am",
    "among", "an", "and", "any", "are", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can", "could",
    "did", "do", "does", "doing", "down", "during", "each", "either", "else",
    "ever", "every", "few", "for", "from", "further", "had", "has", "have",
    "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
    "how", "however", "i", "if", "in", "into", "is", "it", "its", "itself",
    "just", "may", "me", "might", "more", "most", "must", "my", "myself",
    "neither", "no", "nor", "not", "now", "of", "off", "on", "once", "only",
    "or", "other", "our", "ours", "ourselves", "out", "over", "own", "s",
    "same", "shall", "she", "should", "so", "some", "such", "t", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these",
    "they", "this", "those", "through", "thus", "to", "too", "under", "until",
    "up", "upon", "very", "was", "we", "were", "what", "when", "where",
    "whether", "which", "while", "who", "whom", "whose", "why", "will", "with",
    "within", "without", "would", "yet", "you", "your", "yours", "yourself",
    "yourselves",
};

constexpr std::array<std::pair<std::string_view, std::string_view>, 62> kStemExceptions = {{
    {"abbreviat", "abbreviate"},
    {"achiev", "achieve"},
    {"advocat", "advocate"},
    {"arrang", "arrange"},
    {"believ", "believe"},
    {"calculat", "calculate"},
    {"caus", "cause"},
    {"chang", "change"},
    {"clos", "close"},
    {"combin", "combine"},
    {"compar", "compare"},
    {"compil", "compile"},
    {"creat", "create"},
    {"danc", "dance"},
    {"decid", "decide"},
    {"declar", "declare"},
    {"defin", "define"},
    {"determin", "determine"},
    {"divid", "divide"},
    {"estimat", "estimate"},
    {"evolv", "evolve"},
    {"examin", "examine"},
    {"generat", "generate"},
    {"giv", "give"},
    {"imagin", "imagine"},
    {"includ", "include"},
    {"indicat", "indicate"},
    {"introduc", "introduce"},
    {"involv", "involve"},
    {"liv", "live"},
    {"locat", "locate"},
    {"lov", "love"},
    {"mak", "make"},
    {"mov", "move"},
    {"nam", "name"},
    {"nominat", "nominate"},
    {"observ", "observe"},
    {"operat", "operate"},
    {"oppos", "oppose"},
    {"organiz", "organize"},
    {"outlin", "outline"},
    {"pric", "price"},
    {"produc", "produce"},
    {"provid", "provide"},
    {"receiv", "receive"},
    {"recogniz", "recognize"},
    {"reduc", "reduce"},
    {"regulariz", "regularize"},
    {"relat", "relate"},
    {"releas", "release"},
    {"rul", "rule"},
    {"scor", "score"},
    {"separat", "separate"},
    {"serv", "serve"},
    {"solv", "solve"},
    {"sourc", "source"},
    {"stat", "state"},
    {"strik", "strike"},
    {"tak", "take"},
    {"translat", "translate"},
    {"us", "use"},
    {"writ", "write"},
}};

}  // namespace

std::span<const std::string_view> builtin_stopwords() { return kStopwords; }

std::span<const std::pair<std::string_view, std::string_view>> builtin_stem_exceptions() {
  return kStemExceptions;
}

}  // namespace docclust::detail
