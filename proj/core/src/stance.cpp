#include "fands/stance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "fands/csv.hpp"
#include "fands/errors.hpp"

namespace fands {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<std::int64_t> parse_id(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) return std::nullopt;
  return value;
}

std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path.string());
  return in;
}

// Maps header names to column indices; throws naming the first missing column.
std::vector<std::size_t> header_columns(const std::vector<std::string>& header,
                                        const std::vector<std::string_view>& wanted,
                                        const std::string& source) {
  std::vector<std::size_t> indices;
  for (auto name : wanted) {
    auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) {
      return trim(h) == name;
    });
    if (it == header.end())
      throw FormatError(source + ": missing column \"" + std::string(name) + "\"");
    indices.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  return indices;
}

void append_stance(Corpus& corpus, std::set<StanceRecord>& seen, StanceRecord record) {
  if (seen.insert(record).second) corpus.stances.push_back(record);
}

} // namespace

std::string_view to_label(Stance stance) {
  switch (stance) {
  case Stance::kAgree: return "agree";
  case Stance::kDisagree: return "disagree";
  case Stance::kDiscuss: return "discuss";
  case Stance::kUnrelated: return "unrelated";
  }
  return "unrelated";
}

std::optional<Stance> parse_stance(std::string_view text) {
  std::string t = lower(trim(text));
  if (t == "agree" || t == "0") return Stance::kAgree;
  if (t == "disagree" || t == "1") return Stance::kDisagree;
  if (t == "discuss" || t == "2") return Stance::kDiscuss;
  if (t == "unrelated" || t == "3") return Stance::kUnrelated;
  return std::nullopt;
}

Corpus parse_fnc(const std::vector<std::filesystem::path>& stance_csvs,
                 const std::vector<std::filesystem::path>& body_csvs) {
  Corpus corpus;

  for (const auto& path : body_csvs) {
    auto in = open_file(path);
    csv::Reader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row)) continue; // empty file: no records at all
    auto cols = header_columns(row, {"Body ID", "articleBody"}, path.string());
    while (reader.next(row)) {
      if (row.size() <= std::max(cols[0], cols[1]))
        throw RecordError(path.string() + ": too few fields", reader.record_line());
      auto id = parse_id(row[cols[0]]);
      if (!id)
        throw RecordError(path.string() + ": non-integer Body ID \"" + row[cols[0]] + "\"",
                          reader.record_line());
      const std::string& body = row[cols[1]];
      auto [it, inserted] = corpus.articles.emplace(*id, body);
      if (!inserted && it->second != body)
        throw FormatError(path.string() + ": duplicate Body ID " + std::to_string(*id) +
                          " with differing body text");
    }
  }

  const bool have_bodies = !body_csvs.empty();
  std::unordered_map<std::string, std::int64_t> topic_ids;
  std::set<StanceRecord> seen;

  for (const auto& path : stance_csvs) {
    auto in = open_file(path);
    csv::Reader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row)) continue;
    auto cols = header_columns(row, {"Headline", "Body ID", "Stance"}, path.string());
    while (reader.next(row)) {
      if (row.size() <= std::max({cols[0], cols[1], cols[2]}))
        throw RecordError(path.string() + ": too few fields", reader.record_line());
      std::string headline(trim(row[cols[0]]));
      auto news_id = parse_id(row[cols[1]]);
      if (!news_id)
        throw RecordError(path.string() + ": non-integer Body ID \"" + row[cols[1]] + "\"",
                          reader.record_line());
      auto stance = parse_stance(row[cols[2]]);
      if (!stance)
        throw RecordError(path.string() + ": unknown stance label \"" + row[cols[2]] + "\"",
                          reader.record_line());
      if (have_bodies && !corpus.articles.contains(*news_id))
        throw RecordError(path.string() + ": Body ID " + std::to_string(*news_id) +
                          " not present in any bodies file", reader.record_line());

      auto [it, inserted] = topic_ids.emplace(headline, static_cast<std::int64_t>(topic_ids.size() + 1));
      if (inserted) corpus.topics.emplace(it->second, headline);
      if (!have_bodies) corpus.articles.emplace(*news_id, std::string());
      append_stance(corpus, seen, {it->second, *news_id, *stance});
    }
  }
  return corpus;
}

Corpus parse_fnc(const std::filesystem::path& stances_csv,
                 const std::filesystem::path& bodies_csv) {
  return parse_fnc(std::vector{stances_csv}, std::vector{bodies_csv});
}

Corpus parse_stance_table(std::istream& in, std::string_view source_name) {
  Corpus corpus;
  const std::string source(source_name);
  csv::Reader reader(in);
  std::vector<std::string> row;
  if (!reader.next(row)) return corpus;
  auto cols = header_columns(row, {"topic_id", "news_id", "stance"}, source);
  std::set<StanceRecord> seen;
  while (reader.next(row)) {
    if (row.size() <= std::max({cols[0], cols[1], cols[2]}))
      throw RecordError(source + ": too few fields", reader.record_line());
    auto topic_id = parse_id(row[cols[0]]);
    if (!topic_id)
      throw RecordError(source + ": non-integer topic_id \"" + row[cols[0]] + "\"",
                        reader.record_line());
    auto news_id = parse_id(row[cols[1]]);
    if (!news_id)
      throw RecordError(source + ": non-integer news_id \"" + row[cols[1]] + "\"",
                        reader.record_line());
    auto stance = parse_stance(row[cols[2]]);
    if (!stance)
      throw RecordError(source + ": unknown stance \"" + row[cols[2]] + "\"",
                        reader.record_line());
    corpus.topics.emplace(*topic_id, std::string());
    corpus.articles.emplace(*news_id, std::string());
    append_stance(corpus, seen, {*topic_id, *news_id, *stance});
  }
  return corpus;
}

Corpus parse_stance_table(const std::filesystem::path& csv_path) {
  auto in = open_file(csv_path);
  return parse_stance_table(in, csv_path.string());
}

void write_stance_table(std::ostream& out, const Corpus& corpus) {
  out << "topic_id,news_id,stance\n";
  for (const auto& record : corpus.stances) {
    out << record.topic_id << ',' << record.news_id << ','
        << to_label(record.stance) << '\n';
  }
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.n_topics = corpus.topics.size();
  stats.n_articles = corpus.articles.size();
  stats.n_stances = corpus.stances.size();
  for (const auto& record : corpus.stances)
    ++stats.stance_histogram[static_cast<std::size_t>(record.stance)];
  return stats;
}

} // namespace fands
