#include "scanner.h"

#include <cctype>

namespace fria::rdf::detail {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

char Scanner::get() {
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

void Scanner::skip_ws() {
  while (!at_end()) {
    char c = peek();
    if (c == '#') {
      while (!at_end() && peek() != '\n') get();
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      get();
    } else {
      break;
    }
  }
}

void Scanner::skip_inline_ws() {
  while (!at_end() && (peek() == ' ' || peek() == '\t')) get();
}

std::string Scanner::current_token() const {
  if (at_end()) return "<end of input>";
  std::size_t end = pos_;
  while (end < text_.size() && end - pos_ < 40 && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
  if (end == pos_) return std::string(1, text_[pos_]);
  return std::string(text_.substr(pos_, end - pos_));
}

void Scanner::fail(const std::string& message) const { fail(message, line_, column_, current_token()); }

void Scanner::fail(const std::string& message, std::size_t line, std::size_t column, const std::string& token) const {
  throw ParseError(message, line, column, token);
}

void Scanner::expect(char c) {
  if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
  get();
}

std::uint32_t Scanner::read_hex(int digits) {
  std::uint32_t v = 0;
  for (int i = 0; i < digits; ++i) {
    char c = peek();
    if (!std::isxdigit(static_cast<unsigned char>(c))) fail("bad unicode escape");
    get();
    v = v * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                                                         : std::tolower(c) - 'a' + 10);
  }
  return v;
}

std::string Scanner::read_iriref() {
  expect('<');
  std::string out;
  while (true) {
    if (at_end()) fail("unterminated IRI");
    char c = peek();
    if (c == '>') {
      get();
      return out;
    }
    if (c == '\\') {
      get();
      char e = get();
      if (e == 'u') {
        append_utf8(out, read_hex(4));
      } else if (e == 'U') {
        append_utf8(out, read_hex(8));
      } else {
        fail("bad escape in IRI");
      }
      continue;
    }
    if (c == ' ' || c == '\n' || c == '\t' || c == '"' || c == '<' || c == '{' || c == '}' || c == '|' ||
        c == '^' || c == '`') {
      fail("illegal character in IRI");
    }
    out += get();
  }
}

std::string Scanner::read_string(bool allow_long, bool allow_single) {
  char q = peek();
  if (q != '"' && !(allow_single && q == '\'')) fail("expected string");
  bool long_form = false;
  if (allow_long && peek(1) == q && peek(2) == q) {
    long_form = true;
    advance(3);
  } else {
    get();
  }
  std::size_t start_line = line_, start_col = column_;
  std::string out;
  while (true) {
    if (at_end()) fail("unterminated string literal", start_line, start_col, std::string(1, q));
    char c = peek();
    if (long_form) {
      if (c == q && peek(1) == q && peek(2) == q) {
        // a run of more than three quotes closes on the last three
        if (peek(3) == q) {
          out += get();
          continue;
        }
        advance(3);
        return out;
      }
    } else {
      if (c == q) {
        get();
        return out;
      }
      if (c == '\n' || c == '\r') fail("newline in short string literal");
    }
    if (c == '\\') {
      get();
      char e = at_end() ? '\0' : get();
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, read_hex(4)); break;
        case 'U': append_utf8(out, read_hex(8)); break;
        default: fail("bad escape sequence in string");
      }
      continue;
    }
    out += get();
  }
}

std::string Scanner::read_blank_label() {
  if (!starts_with("_:")) fail("expected blank node label");
  advance(2);
  std::string out;
  while (!at_end()) {
    char c = peek();
    auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '_' || c == '-' || u >= 0x80) {
      out += get();
    } else if (c == '.' && !out.empty()) {
      // dots are allowed inside labels but not at the end
      char n = peek(1);
      auto nu = static_cast<unsigned char>(n);
      if (std::isalnum(nu) || n == '_' || n == '-' || n == '.' || nu >= 0x80) {
        out += get();
      } else {
        break;
      }
    } else {
      break;
    }
  }
  if (out.empty()) fail("empty blank node label");
  return out;
}

std::string Scanner::read_langtag() {
  expect('@');
  std::string out;
  while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) out += get();
  if (out.empty()) fail("empty language tag");
  while (peek() == '-' && std::isalnum(static_cast<unsigned char>(peek(1)))) {
    out += get();
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) out += get();
  }
  return out;
}

}  // namespace fria::rdf::detail
