// Copyright 2026 The oometric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oometric/cyclomatic.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace oometric::cyclomatic {

namespace {

enum class TokenKind { Identifier, Number, String, Char, Punct };

struct Token {
  TokenKind kind;
  std::string_view text;
};

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Tokenizer for stripped text: literal bodies are already blank, so a literal
// runs from its opening delimiter to the next matching delimiter.
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = s.size();
  auto emit = [&](TokenKind kind, std::size_t start) {
    out.push_back(Token{kind, s.substr(start, i - start)});
  };
  while (i < n) {
    const auto c = static_cast<unsigned char>(s[i]);
    const std::size_t start = i;
    if (space(c)) {
      ++i;
    } else if (ident_start(c)) {
      while (i < n && ident_part(static_cast<unsigned char>(s[i]))) ++i;
      emit(TokenKind::Identifier, start);
    } else if (digit(c) || (c == '.' && i + 1 < n && digit(static_cast<unsigned char>(s[i + 1])))) {
      while (i < n) {
        const auto d = static_cast<unsigned char>(s[i]);
        if (ident_part(d) || d == '.') {
          ++i;
        } else if ((d == '+' || d == '-') &&
                   (s[i - 1] == 'e' || s[i - 1] == 'E' || s[i - 1] == 'p' || s[i - 1] == 'P')) {
          ++i;
        } else {
          break;
        }
      }
      emit(TokenKind::Number, start);
    } else if (s.substr(i, 3) == "\"\"\"") {
      const auto close = s.find("\"\"\"", i + 3);
      i = close == std::string_view::npos ? n : close + 3;
      emit(TokenKind::String, start);
    } else if (c == '"' || c == '\'') {
      const auto close = s.find(static_cast<char>(c), i + 1);
      i = close == std::string_view::npos ? n : close + 1;
      emit(c == '"' ? TokenKind::String : TokenKind::Char, start);
    } else if ((c == '&' || c == '|') && i + 1 < n && s[i + 1] == static_cast<char>(c)) {
      i += 2;
      emit(TokenKind::Punct, start);
    } else {
      ++i;
      emit(TokenKind::Punct, start);
    }
  }
  return out;
}

bool counts_as_ternary(const std::vector<Token>& tokens, std::size_t i) {
  if (i == 0) return false;
  const auto& prev = tokens[i - 1];
  const bool prev_ok = prev.kind != TokenKind::Punct || prev.text == ")" || prev.text == "]";
  if (!prev_ok) return false;
  if (i + 1 < tokens.size()) {
    const auto next = tokens[i + 1].text;
    if (next == ">" || next == "extends" || next == "super") return false;
  }
  return true;
}

void blank(std::string& out, std::size_t from, std::size_t to) {
  for (std::size_t k = from; k < to; ++k) {
    if (out[k] != '\n' && out[k] != '\r') out[k] = ' ';
  }
}

// End of a quoted literal body starting at `i`, honouring backslash escapes.
std::size_t literal_end(std::string_view s, std::size_t i, std::string_view delimiter) {
  while (i < s.size()) {
    if (s[i] == '\\') {
      i += 2;
    } else if (s.substr(i, delimiter.size()) == delimiter) {
      return i;
    } else {
      ++i;
    }
  }
  return s.size();
}

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto d = static_cast<unsigned char>(s[i + k]);
      if ((d & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (d & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

}  // namespace

DecisionCount& DecisionCount::operator+=(const DecisionCount& o) {
  if_count += o.if_count;
  case_count += o.case_count;
  for_count += o.for_count;
  while_count += o.while_count;
  catch_count += o.catch_count;
  and_op += o.and_op;
  or_op += o.or_op;
  ternary += o.ternary;
  return *this;
}

std::string strip_noncode(std::string_view text) {
  std::string out(text);
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    if (text.substr(i, 2) == "//") {
      const auto end = text.find('\n', i);
      const auto stop = end == std::string_view::npos ? n : end;
      blank(out, i, stop);
      i = stop;
    } else if (text.substr(i, 2) == "/*") {
      const auto end = text.find("*/", i + 2);
      const auto stop = end == std::string_view::npos ? n : end + 2;
      blank(out, i, stop);
      i = stop;
    } else if (text.substr(i, 3) == "\"\"\"") {
      const auto end = literal_end(text, i + 3, "\"\"\"");
      blank(out, i + 3, end);
      i = std::min(n, end + 3);
    } else if (text[i] == '"' || text[i] == '\'') {
      const char quote = text[i];
      const auto end = literal_end(text, i + 1, std::string_view(&quote, 1));
      blank(out, i + 1, std::min(end, n));
      i = std::min(n, end + 1);
    } else {
      ++i;
    }
  }
  return out;
}

DecisionCount count_decision_points(std::string_view stripped) {
  DecisionCount count;
  const auto tokens = tokenize(stripped);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind == TokenKind::Identifier) {
      if (t.text == "if") ++count.if_count;
      else if (t.text == "case") ++count.case_count;
      else if (t.text == "for") ++count.for_count;
      else if (t.text == "while") ++count.while_count;
      else if (t.text == "catch") ++count.catch_count;
    } else if (t.kind == TokenKind::Punct) {
      if (t.text == "&&") ++count.and_op;
      else if (t.text == "||") ++count.or_op;
      else if (t.text == "?" && counts_as_ternary(tokens, i)) ++count.ternary;
    }
  }
  return count;
}

std::string attribute_primary_class(std::string_view stripped, std::string_view file_stem) {
  const auto tokens = tokenize(stripped);
  std::string package;
  std::string found;
  int depth = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto text = tokens[i].text;
    if (text == "{") {
      ++depth;
    } else if (text == "}") {
      --depth;
    } else if (depth == 0 && tokens[i].kind == TokenKind::Identifier) {
      if (text == "package" && package.empty()) {
        for (std::size_t k = i + 1; k < tokens.size() && tokens[k].text != ";"; ++k) {
          package += tokens[k].text;
        }
      } else if ((text == "class" || text == "interface" || text == "enum" || text == "record") &&
                 i + 1 < tokens.size() && tokens[i + 1].kind == TokenKind::Identifier &&
                 tokens[i + 1].text == file_stem && found.empty()) {
        found = std::string(file_stem);
      }
    }
  }
  if (found.empty()) return {};
  return package.empty() ? found : package + "." + found;
}

SourceUnit make_source_unit(std::filesystem::path path, std::string text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);
  if (!valid_utf8(text)) {
    throw SourceError(SourceError::Kind::Encoding, path.string() + ": not valid UTF-8");
  }
  SourceUnit unit{std::move(path), std::move(text), {}};
  unit.primary_class =
      attribute_primary_class(strip_noncode(unit.text), unit.path.stem().string());
  return unit;
}

SourceUnit load_source_unit(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceError(SourceError::Kind::Io, path.string() + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw SourceError(SourceError::Kind::Io, path.string() + ": read failed");
  return make_source_unit(path, std::move(buffer).str());
}

DecisionCount cc_of_source(const SourceUnit& unit) {
  return count_decision_points(strip_noncode(unit.text));
}

}  // namespace oometric::cyclomatic
