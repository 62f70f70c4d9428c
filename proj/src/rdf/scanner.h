#pragma once

// Character cursor shared by the Turtle and N-Triples readers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "fria/rdf/io.h"

namespace fria::rdf::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t first_line = 1) : text_(text), line_(first_line) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  char get();
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) get();
  }

  // Skips whitespace and '#' comments.
  void skip_ws();
  // Skips spaces and tabs only.
  void skip_inline_ws();

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail(const std::string& message, std::size_t line, std::size_t column,
                         const std::string& token) const;
  void expect(char c);

  // The next whitespace-delimited chunk, for error messages.
  std::string current_token() const;

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  // <...> with \u escapes; returns the raw (unresolved) IRI text.
  std::string read_iriref();
  // "..." / '...' / """...""" / '''...'''; `allow_long` and `allow_single`
  // are off for N-Triples.
  std::string read_string(bool allow_long, bool allow_single);
  // [A-Za-z0-9_-] label after "_:".
  std::string read_blank_label();
  // Language tag after '@'.
  std::string read_langtag();

 private:
  std::uint32_t read_hex(int digits);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
};

void append_utf8(std::string& out, std::uint32_t cp);

}  // namespace fria::rdf::detail
