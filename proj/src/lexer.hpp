#pragma once

// Shared tokenizer for the expression and operator text grammars.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "holopow/errors.hpp"
#include "holopow/rational.hpp"

namespace holopow::detail {

enum class Tok { Integer, X, I, Dx, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t p = 0;
  while (p < s.size()) {
    char c = s[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t q = p;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      out.push_back({Tok::Integer, std::string(s.substr(p, q - p)), p});
      p = q;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t q = p;
      while (q < s.size() && std::isalnum(static_cast<unsigned char>(s[q]))) ++q;
      std::string word(s.substr(p, q - p));
      if (word == "x") {
        out.push_back({Tok::X, word, p});
      } else if (word == "i") {
        out.push_back({Tok::I, word, p});
      } else if (word == "Dx") {
        out.push_back({Tok::Dx, word, p});
      } else {
        throw ParseError("unknown symbol '" + word + "'", p);
      }
      p = q;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
    out.push_back({k, std::string(1, c), p});
    ++p;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

}  // namespace holopow::detail
