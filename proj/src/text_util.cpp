#include "text_util.hpp"

#include <cctype>

namespace pslens::detail {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> pieces;
  std::size_t start = 0;
  while (true) {
    std::size_t at = text.find(separator, start);
    pieces.push_back(trim(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return pieces;
}

std::vector<Integer> parse_call(std::string_view text, std::string_view head, std::size_t arity) {
  std::string_view body = trim(text);
  auto fail = [&] {
    throw ParseError("expected " + std::string(head) + "(" + std::string(arity == 2 ? "a,b" : "a,b,c") +
                     "), got '" + std::string(text) + "'");
  };
  if (body.substr(0, head.size()) != head) fail();
  body = trim(body.substr(head.size()));
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') fail();
  auto pieces = split(body.substr(1, body.size() - 2), ',');
  if (pieces.size() != arity) fail();
  std::vector<Integer> values;
  for (auto piece : pieces) values.push_back(parse_integer(piece));
  return values;
}

}  // namespace pslens::detail
