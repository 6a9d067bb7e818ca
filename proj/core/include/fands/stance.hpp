#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fands {

/// Stance of a news article towards a topic. Numeric codes follow the
/// conventional FNC encoding: agree=0, disagree=1, discuss=2, unrelated=3.
enum class Stance : int { kAgree = 0, kDisagree = 1, kDiscuss = 2, kUnrelated = 3 };

std::string_view to_label(Stance stance);

/// Parses a stance label (case-insensitive) or its numeric code 0-3.
std::optional<Stance> parse_stance(std::string_view text);

struct StanceRecord {
  std::int64_t topic_id = 0;
  std::int64_t news_id = 0;
  Stance stance = Stance::kAgree;

  friend auto operator<=>(const StanceRecord&, const StanceRecord&) = default;
};

/// Normalized topic/news/stance tables. Topic and news ids are unique keys;
/// the stance list keeps input order with exact duplicate triples removed.
struct Corpus {
  std::map<std::int64_t, std::string> topics;   // topic_id -> headline
  std::map<std::int64_t, std::string> articles; // news_id -> body (may be empty)
  std::vector<StanceRecord> stances;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Parses FNC-style stance and body CSVs. Stance files need columns
/// Headline, Body ID, Stance; body files need Body ID, articleBody.
/// Multiple files of each kind are concatenated in the order given
/// (train first, then competition). Topics are assigned ids 1,2,... in
/// first-appearance order of the trimmed headline text; Body IDs are used
/// verbatim as news ids. Body files may be omitted, in which case articles
/// are registered from the stance rows with empty bodies.
Corpus parse_fnc(const std::vector<std::filesystem::path>& stance_csvs,
                 const std::vector<std::filesystem::path>& body_csvs);
Corpus parse_fnc(const std::filesystem::path& stances_csv,
                 const std::filesystem::path& bodies_csv);

/// Parses the generic stance table: header topic_id,news_id,stance with
/// stance given as a label or numeric code. Ids are used verbatim; article
/// bodies are empty.
Corpus parse_stance_table(const std::filesystem::path& csv);
Corpus parse_stance_table(std::istream& in, std::string_view source_name = "<stream>");

/// Writes a Corpus in the generic stance-table format (labels, not codes).
void write_stance_table(std::ostream& out, const Corpus& corpus);

struct CorpusStats {
  std::size_t n_topics = 0;
  std::size_t n_articles = 0;
  std::size_t n_stances = 0;
  std::array<std::size_t, 4> stance_histogram{}; // indexed by Stance code
};

CorpusStats corpus_stats(const Corpus& corpus);

} // namespace fands
