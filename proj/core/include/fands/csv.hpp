#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fands::csv {

/// Streaming RFC 4180 reader. Handles quoted fields with embedded commas,
/// doubled quotes and newlines; accepts both LF and CRLF records; strips a
/// UTF-8 BOM at the start of the stream.
class Reader {
public:
  explicit Reader(std::istream& in);

  /// Reads the next record into `fields`. Returns false at end of input.
  /// Throws RecordError if the input ends inside a quoted field.
  bool next(std::vector<std::string>& fields);

  /// 1-based line number where the most recent record started.
  std::size_t record_line() const { return record_line_; }

private:
  std::istream* in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 1;
};

/// Quotes `field` if it contains a comma, quote or newline.
std::string escape(std::string_view field);

/// Writes one record, escaping fields as needed, terminated by '\n'.
void write_record(std::ostream& out, const std::vector<std::string>& fields);

} // namespace fands::csv
