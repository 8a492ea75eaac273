#include "clifford/lang/lexer.hpp"

#include <cctype>

namespace clifford::lang {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void fail(const std::string &msg, std::size_t begin, std::size_t end) {
  throw Error(ErrorKind::LexError, msg, Span{begin, end});
}

} // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;

    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i]))
        ++i;
      if (i + 1 < src.size() && src[i] == '.' && is_digit(src[i + 1])) {
        ++i;
        while (i < src.size() && is_digit(src[i]))
          ++i;
        if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < src.size() && (src[j] == '+' || src[j] == '-'))
            ++j;
          if (j < src.size() && is_digit(src[j])) {
            i = j;
            while (i < src.size() && is_digit(src[i]))
              ++i;
          }
        }
      }
      out.push_back({TokenKind::number, std::string(src.substr(start, i - start)), {}, {start, i}});
      continue;
    }

    if (c == 'e' && i + 1 < src.size() && src[i + 1] == '{') {
      i += 2;
      std::vector<unsigned> idx;
      while (true) {
        while (i < src.size() && src[i] == ' ')
          ++i;
        std::size_t num_start = i;
        while (i < src.size() && is_digit(src[i]))
          ++i;
        if (num_start == i)
          fail("expected a generator index inside e{...}", num_start, i + 1);
        unsigned long v = std::stoul(std::string(src.substr(num_start, i - num_start)));
        if (v == 0 || v > 64)
          fail("generator index must be in 1..64", num_start, i);
        idx.push_back(static_cast<unsigned>(v));
        while (i < src.size() && src[i] == ' ')
          ++i;
        if (i < src.size() && src[i] == ',') {
          ++i;
          continue;
        }
        if (i < src.size() && src[i] == '}') {
          ++i;
          break;
        }
        fail("expected ',' or '}' in e{...}", start, i);
      }
      out.push_back({TokenKind::basis, std::string(src.substr(start, i - start)), idx, {start, i}});
      continue;
    }

    if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i]))
        ++i;
      std::string word(src.substr(start, i - start));
      bool shorthand = word.size() > 1 && word[0] == 'e';
      for (std::size_t k = 1; shorthand && k < word.size(); ++k)
        shorthand = is_digit(word[k]);
      if (shorthand) {
        std::vector<unsigned> idx;
        for (std::size_t k = 1; k < word.size(); ++k) {
          if (word[k] == '0')
            fail("e0 is not a generator; indices start at 1 (use e{10,...} for two digits)",
                 start, i);
          idx.push_back(static_cast<unsigned>(word[k] - '0'));
        }
        out.push_back({TokenKind::basis, word, idx, {start, i}});
      } else {
        out.push_back({TokenKind::identifier, word, {}, {start, i}});
      }
      continue;
    }

    static constexpr std::string_view kOps = "+-*/|^~(),=";
    if (kOps.find(c) != std::string_view::npos) {
      ++i;
      out.push_back({TokenKind::op, std::string(1, c), {}, {start, i}});
      continue;
    }
    fail(std::string("unexpected character '") + c + "'", start, start + 1);
  }
  out.push_back({TokenKind::end, "", {}, {src.size(), src.size()}});
  return out;
}

std::string describe(const Token &t) {
  switch (t.kind) {
  case TokenKind::end: return "end of input";
  case TokenKind::number: return "number '" + t.text + "'";
  case TokenKind::basis: return "basis blade '" + t.text + "'";
  case TokenKind::identifier: return "identifier '" + t.text + "'";
  case TokenKind::op: return "'" + t.text + "'";
  }
  return "token";
}

} // namespace clifford::lang
