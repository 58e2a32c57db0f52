#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpusqc/error.hpp"

namespace corpusqc::python {

enum class TokenType : std::uint8_t {
  name,
  number,
  string,
  op,
  newline,
  nl,
  indent,
  dedent,
  comment,
  end_marker,
  error,
};

struct Token {
  TokenType type = TokenType::error;
  std::string_view text;
  std::uint32_t begin = 0;  // byte offset into the source
  std::uint32_t end = 0;
  std::uint32_t line = 1;  // 1-based
  std::uint32_t col = 0;   // 0-based byte column
  std::uint32_t end_line = 1;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::uint32_t line, std::uint32_t col)
      : Error("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  std::uint32_t line() const noexcept { return line_; }
  std::uint32_t col() const noexcept { return col_; }

 private:
  std::uint32_t line_;
  std::uint32_t col_;
};

struct LexOptions {
  // Accept `$NAME` and `$...NAME` metavariables as name tokens.
  bool pattern_mode = false;
  // Never throw: malformed input becomes `error` tokens.
  bool tolerant = false;
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80;
}

inline bool is_ident_char(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Longest-first operator table.
inline constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=",
    ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+",   "-",   "*",   "/",   "%",   "@",  "&",  "|",  "^",  "~",  "<",  ">",
    "(",   ")",   "[",   "]",   "{",   "}",  ",",  ":",  ".",  ";",  "="};

class Lexer {
 public:
  Lexer(std::string_view src, LexOptions opts) : src_(src), opts_(opts) {}

  std::vector<Token> run() {
    out_.reserve(src_.size() / 4 + 8);
    while (true) {
      if (at_line_start_) {
        at_line_start_ = false;
        if (paren_depth_ == 0 && !continuation_) handle_indentation();
        continuation_ = false;
      }
      if (pos_ >= src_.size()) break;
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\f') {
        ++pos_;
        continue;
      }
      if (c == '#') {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
        emit(TokenType::comment, start, pos_, line_);
        continue;
      }
      if (c == '\n' || c == '\r') {
        const std::size_t start = pos_;
        consume_newline();
        const bool logical = paren_depth_ == 0 && line_has_content_;
        emit(logical ? TokenType::newline : TokenType::nl, start, pos_, line_ - 1);
        if (logical) line_has_content_ = false;
        at_line_start_ = true;
        continue;
      }
      if (c == '\\') {
        const std::size_t start = pos_;
        ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == '\n' || src_[pos_] == '\r')) {
          consume_newline();
          continuation_ = true;
          at_line_start_ = true;
          continue;
        }
        if (pos_ >= src_.size()) {
          fail("unexpected EOF after line continuation", start);
          continue;
        }
        fail("unexpected character after line continuation character", start);
        continue;
      }
      if (lex_string_or_name()) continue;
      if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        lex_number();
        continue;
      }
      if (c == '$' && opts_.pattern_mode) {
        lex_metavariable();
        continue;
      }
      if (lex_operator()) continue;
      fail(std::string("invalid character '") + c + "'", pos_);
    }
    if (line_has_content_) {
      emit(TokenType::newline, pos_, pos_, line_);
      line_has_content_ = false;
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      alt_indents_.pop_back();
      emit(TokenType::dedent, pos_, pos_, line_);
    }
    if (paren_depth_ > 0 && !opts_.tolerant) {
      throw SyntaxError("unexpected EOF: unclosed bracket", line_, col_of(pos_));
    }
    emit(TokenType::end_marker, pos_, pos_, line_);
    return std::move(out_);
  }

 private:
  std::uint32_t col_of(std::size_t p) const { return static_cast<std::uint32_t>(p - line_start_); }

  void emit(TokenType type, std::size_t begin, std::size_t end, std::uint32_t start_line) {
    Token t;
    t.type = type;
    t.text = src_.substr(begin, end - begin);
    t.begin = static_cast<std::uint32_t>(begin);
    t.end = static_cast<std::uint32_t>(end);
    t.line = start_line;
    t.end_line = line_;
    t.col = start_line == line_ ? col_of(begin) : start_col_;
    if (type != TokenType::comment && type != TokenType::nl && type != TokenType::newline &&
        type != TokenType::indent && type != TokenType::dedent && type != TokenType::end_marker) {
      line_has_content_ = true;
    }
    out_.push_back(t);
  }

  void fail(const std::string& what, std::size_t at) {
    if (!opts_.tolerant) throw SyntaxError(what, line_, col_of(at));
    const std::size_t end = std::min(src_.size(), at + 1);
    emit(TokenType::error, at, end, line_);
    if (pos_ < end) pos_ = end;
  }

  void consume_newline() {
    if (src_[pos_] == '\r' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') ++pos_;
    ++pos_;
    ++line_;
    line_start_ = pos_;
  }

  // Measures the indentation of a new logical line and emits indent/dedent
  // tokens. Blank and comment-only lines leave the indentation stack alone.
  void handle_indentation() {
    int col = 0;
    int alt = 0;
    std::size_t p = pos_;
    while (p < src_.size()) {
      const char c = src_[p];
      if (c == ' ') {
        ++col;
        ++alt;
      } else if (c == '\t') {
        col = (col / 8 + 1) * 8;
        ++alt;
      } else if (c == '\f') {
        col = 0;
        alt = 0;
      } else {
        break;
      }
      ++p;
    }
    if (p >= src_.size() || src_[p] == '#' || src_[p] == '\n' || src_[p] == '\r' ||
        (src_[p] == '\\' && p + 1 < src_.size() && (src_[p + 1] == '\n' || src_[p + 1] == '\r'))) {
      return;
    }
    const std::size_t start = pos_;
    pos_ = p;
    if (col > indents_.back()) {
      if (alt <= alt_indents_.back()) {
        fail("inconsistent use of tabs and spaces in indentation", start);
        return;
      }
      indents_.push_back(col);
      alt_indents_.push_back(alt);
      Token t;
      t.type = TokenType::indent;
      t.text = src_.substr(start, p - start);
      t.begin = static_cast<std::uint32_t>(start);
      t.end = static_cast<std::uint32_t>(p);
      t.line = t.end_line = line_;
      out_.push_back(t);
      return;
    }
    while (col < indents_.back()) {
      indents_.pop_back();
      alt_indents_.pop_back();
      Token t;
      t.type = TokenType::dedent;
      t.begin = t.end = static_cast<std::uint32_t>(p);
      t.line = t.end_line = line_;
      t.col = static_cast<std::uint32_t>(p - line_start_);
      out_.push_back(t);
    }
    if (col != indents_.back()) {
      fail("unindent does not match any outer indentation level", start);
      return;
    }
    if (alt != alt_indents_.back()) fail("inconsistent use of tabs and spaces in indentation", start);
  }

  static bool valid_prefix(std::string_view prefix) {
    std::string lower;
    for (char ch : prefix) lower.push_back(static_cast<char>(ch | 0x20));
    return lower.empty() || lower == "r" || lower == "u" || lower == "b" || lower == "f" ||
           lower == "br" || lower == "rb" || lower == "fr" || lower == "rf";
  }

  bool lex_string_or_name() {
    const std::size_t start = pos_;
    const auto c = static_cast<unsigned char>(src_[pos_]);
    if (c == '"' || c == '\'') {
      start_line_ = line_;
      start_col_ = col_of(start);
      lex_string_body(start, false);
      return true;
    }
    if (!is_ident_start(c)) return false;
    std::size_t p = pos_;
    while (p < src_.size() && is_ident_char(static_cast<unsigned char>(src_[p]))) ++p;
    const std::string_view word = src_.substr(start, p - start);
    if (p < src_.size() && (src_[p] == '"' || src_[p] == '\'') && word.size() <= 2 &&
        valid_prefix(word)) {
      bool fmt = false;
      bool raw = false;
      for (char ch : word) {
        fmt = fmt || ch == 'f' || ch == 'F';
        raw = raw || ch == 'r' || ch == 'R';
      }
      start_line_ = line_;
      start_col_ = col_of(start);
      pos_ = p;
      lex_string_body(start, fmt, raw);
      return true;
    }
    pos_ = p;
    emit(TokenType::name, start, p, line_);
    return true;
  }

  // pos_ is at the opening quote; `start` is where the prefix began.
  void lex_string_body(std::size_t start, bool fmt, bool raw = false) {
    const std::uint32_t first_line = line_;
    if (!scan_string(fmt, raw)) {
      if (!opts_.tolerant) throw SyntaxError("unterminated string literal", first_line, start_col_);
      emit(TokenType::error, start, pos_, first_line);
      return;
    }
    emit(TokenType::string, start, pos_, first_line);
  }

  // Scans a quoted literal starting at pos_ (the quote). Returns false when
  // the literal is unterminated; pos_ is then left at the point of failure.
  bool scan_string(bool fmt, bool raw = false) {
    const char quote = src_[pos_];
    const bool triple =
        pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote;
    pos_ += triple ? 3 : 1;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\') {
        ++pos_;
        if (fmt && pos_ < src_.size() && src_[pos_] == '{') continue;
        if (fmt && !raw && pos_ + 1 < src_.size() && src_[pos_] == 'N' && src_[pos_ + 1] == '{') {
          while (pos_ < src_.size() && src_[pos_] != '}' && src_[pos_] != quote) ++pos_;
          if (pos_ < src_.size() && src_[pos_] == '}') ++pos_;
          continue;
        }
        if (pos_ < src_.size()) {
          if (src_[pos_] == '\n' || src_[pos_] == '\r') {
            consume_newline();
          } else {
            ++pos_;
          }
        }
        continue;
      }
      if (c == '\n' || c == '\r') {
        if (!triple) return false;
        consume_newline();
        continue;
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          return true;
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote) {
          pos_ += 3;
          return true;
        }
        ++pos_;
        continue;
      }
      if (fmt && c == '{') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '{') {
          pos_ += 2;
          continue;
        }
        ++pos_;
        if (!scan_replacement_field()) return false;
        continue;
      }
      ++pos_;
    }
    return false;
  }

  // Inside an f-string replacement field, just past the '{'. Consumes through
  // the matching '}'.
  bool scan_replacement_field() {
    int depth = 0;
    bool in_spec = false;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (in_spec) {
        if (c == '{') {
          ++pos_;
          if (!scan_replacement_field()) return false;
          continue;
        }
        if (c == '}') {
          ++pos_;
          return true;
        }
        if (c == '\n' || c == '\r') {
          consume_newline();
          continue;
        }
        ++pos_;
        continue;
      }
      if (c == '"' || c == '\'') {
        if (!scan_string(false)) return false;
        continue;
      }
      if (is_ident_start(static_cast<unsigned char>(c))) {
        // Nested prefixed literal, e.g. f"{f'{x}'}".
        std::size_t p = pos_;
        while (p < src_.size() && is_ident_char(static_cast<unsigned char>(src_[p]))) ++p;
        const std::string_view word = src_.substr(pos_, p - pos_);
        if (p < src_.size() && (src_[p] == '"' || src_[p] == '\'') && word.size() <= 2 &&
            valid_prefix(word)) {
          bool nested_fmt = false;
          bool nested_raw = false;
          for (char ch : word) {
            nested_fmt = nested_fmt || ch == 'f' || ch == 'F';
            nested_raw = nested_raw || ch == 'r' || ch == 'R';
          }
          pos_ = p;
          if (!scan_string(nested_fmt, nested_raw)) return false;
          continue;
        }
        pos_ = p;
        continue;
      }
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if (c == ')' || c == ']') {
        --depth;
      } else if (c == '}') {
        if (depth == 0) {
          ++pos_;
          return true;
        }
        --depth;
      } else if (c == ':' && depth == 0) {
        in_spec = true;
      } else if (c == '\n' || c == '\r') {
        consume_newline();
        continue;
      }
      ++pos_;
    }
    return false;
  }

  void lex_number() {
    const std::size_t start = pos_;
    auto digits = [&](auto pred) {
      bool any = false;
      while (pos_ < src_.size()) {
        const char c = src_[pos_];
        if (pred(c)) {
          any = true;
          ++pos_;
        } else if (c == '_' && any && pos_ + 1 < src_.size() && pred(src_[pos_ + 1])) {
          ++pos_;
        } else {
          break;
        }
      }
      return any;
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size()) {
      const char k = static_cast<char>(src_[pos_ + 1] | 0x20);
      if (k == 'x' || k == 'o' || k == 'b') {
        pos_ += 2;
        if (pos_ < src_.size() && src_[pos_] == '_') ++pos_;
        bool ok = false;
        if (k == 'x') ok = digits([](char c) { return is_hex_digit(c); });
        if (k == 'o') ok = digits([](char c) { return c >= '0' && c <= '7'; });
        if (k == 'b') ok = digits([](char c) { return c == '0' || c == '1'; });
        if (!ok || (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_])))) {
          fail("invalid number literal", start);
          return;
        }
        emit(TokenType::number, start, pos_, line_);
        return;
      }
    }
    const bool leading_dot = src_[pos_] == '.';
    bool is_float = false;
    if (!leading_dot) digits(is_digit);
    const std::string_view int_part = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && src_[pos_] == '.') {
      is_float = true;
      ++pos_;
      digits(is_digit);
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && is_digit(src_[p])) {
        is_float = true;
        pos_ = p;
        digits(is_digit);
      }
    }
    bool imaginary = false;
    if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) {
      imaginary = true;
      ++pos_;
    }
    if (!is_float && !imaginary && int_part.size() > 1 && int_part[0] == '0') {
      for (char ch : int_part) {
        if (ch != '0' && ch != '_') {
          fail("leading zeros in decimal integer literals are not permitted", start);
          return;
        }
      }
    }
    emit(TokenType::number, start, pos_, line_);
  }

  void lex_metavariable() {
    const std::size_t start = pos_;
    ++pos_;
    if (src_.substr(pos_, 3) == "...") pos_ += 3;
    const std::size_t name_start = pos_;
    while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == name_start) {
      fail("empty metavariable name", start);
      return;
    }
    emit(TokenType::name, start, pos_, line_);
  }

  bool lex_operator() {
    for (std::string_view op : kOperators) {
      if (src_.compare(pos_, op.size(), op) != 0) continue;
      const std::size_t start = pos_;
      const char c = op[0];
      if (op.size() == 1 && (c == '(' || c == '[' || c == '{')) ++paren_depth_;
      if (op.size() == 1 && (c == ')' || c == ']' || c == '}')) {
        if (paren_depth_ == 0) {
          fail(std::string("unmatched '") + c + "'", start);
          return true;
        }
        --paren_depth_;
      }
      pos_ += op.size();
      emit(TokenType::op, start, pos_, line_);
      return true;
    }
    return false;
  }

  std::string_view src_;
  LexOptions opts_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t start_line_ = 1;
  std::uint32_t start_col_ = 0;
  std::vector<int> indents_{0};
  std::vector<int> alt_indents_{0};
  int paren_depth_ = 0;
  bool at_line_start_ = true;
  bool continuation_ = false;
  bool line_has_content_ = false;
  std::vector<Token> out_;
};

}  // namespace detail

// Splits Python source into tokens in the manner of the reference tokenizer:
// logical NEWLINE vs non-logical NL, INDENT/DEDENT from the indentation stack,
// and comments as their own tokens. Throws SyntaxError unless `tolerant`.
inline std::vector<Token> tokenize(std::string_view src, LexOptions opts = {}) {
  return detail::Lexer(src, opts).run();
}

// Tokens that carry lexical content: everything except comments and the
// whitespace-structure tokens (NEWLINE, NL, INDENT, DEDENT, ENDMARKER).
inline bool is_lexical(const Token& t) {
  return t.type == TokenType::name || t.type == TokenType::number ||
         t.type == TokenType::string || t.type == TokenType::op || t.type == TokenType::error;
}

// Number of lexical tokens in `src`; comments and whitespace tokens excluded.
// Malformed input is counted in tolerant mode.
inline std::size_t count_lexical_tokens(std::string_view src) {
  std::size_t n = 0;
  for (const Token& t : tokenize(src, {.tolerant = true})) n += is_lexical(t) ? 1 : 0;
  return n;
}

// Lexical token texts, the unit used by n-gram metrics.
inline std::vector<std::string> lexical_tokens(std::string_view src) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(src, {.tolerant = true})) {
    if (is_lexical(t)) out.emplace_back(t.text);
  }
  return out;
}

}  // namespace corpusqc::python
