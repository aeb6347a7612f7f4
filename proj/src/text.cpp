#include "rcomm/text.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace rcomm::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      if (--depth < 0) throw std::invalid_argument("unbalanced ')'");
    } else if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '('");
  parts.push_back(s.substr(start));
  return parts;
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::pair<int, int> parse_symbol(std::string_view s, char prefix) {
  s = trim(s);
  if (s.empty() || s.front() != prefix) throw std::invalid_argument("expected symbol '" + std::string(1, prefix) + "'");
  s.remove_prefix(1);
  auto caret = s.find('^');
  int index = parse_int(trim(s.substr(0, caret)));
  int power = caret == std::string_view::npos ? 1 : parse_int(trim(s.substr(caret + 1)));
  return {index, power};
}

}  // namespace rcomm::text
