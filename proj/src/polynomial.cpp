#include "hilb/polynomial.hpp"

namespace hilb::detail {

std::vector<Token> tokenize_polynomial(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t s = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      // a rational literal is digits '/' digits with no intervening space
      if (i + 1 < text.size() && text[i] == '/' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      }
      out.push_back({Token::Number, text.substr(s, i - s)});
    } else if (std::isalpha(c) || c == '_') {
      std::size_t s = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Ident, text.substr(s, i - s)});
    } else if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
      out.push_back({Token::Op, std::string(1, static_cast<char>(c))});
      ++i;
    } else {
      fail(ErrorCode::Parse, std::string("unexpected character '") + static_cast<char>(c) + "' in polynomial '" + text + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

}  // namespace hilb::detail
