#include "fands/csv.hpp"

#include <istream>
#include <ostream>

#include "fands/errors.hpp"

namespace fands::csv {

Reader::Reader(std::istream& in) : in_(&in) {
  // Strip a UTF-8 BOM if present.
  if (in.peek() == 0xEF) {
    char bom[3] = {};
    in.read(bom, 3);
    if (in.gcount() != 3 || bom[1] != '\xBB' || bom[2] != '\xBF') {
      in.clear();
      in.seekg(0);
    }
  }
}

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();
  std::istream& in = *in_;

  int ch = in.get();
  if (ch == std::istream::traits_type::eof()) return false;

  record_line_ = line_;
  std::string field;
  bool quoted = false;

  auto end_field = [&]() {
    fields.push_back(std::move(field));
    field.clear();
  };

  while (true) {
    if (ch == std::istream::traits_type::eof()) {
      if (quoted) throw RecordError("unterminated quoted field", record_line_);
      end_field();
      return true;
    }
    char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
    } else {
      switch (c) {
      case ',':
        end_field();
        break;
      case '\r':
        if (in.peek() != '\n') field.push_back(c); // lone CR kept literally
        break;
      case '\n':
        ++line_;
        // A trailing newline at the very end of the file closes the stream,
        // it does not open an empty record.
        if (fields.empty() && field.empty() &&
            in.peek() == std::istream::traits_type::eof())
          return false;
        end_field();
        return true;
      case '"':
        if (field.empty()) {
          quoted = true;
        } else {
          field.push_back(c); // lenient: quote inside an unquoted field
        }
        break;
      default:
        field.push_back(c);
        break;
      }
    }
    ch = in.get();
  }
}

std::string escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << escape(fields[i]);
  }
  out.put('\n');
}

} // namespace fands::csv
