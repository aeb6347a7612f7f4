#ifndef RCOMM_TEXT_HPP
#define RCOMM_TEXT_HPP

#include <string_view>
#include <utility>
#include <vector>

// Small tokenizing helpers shared by the coefficient and operator parsers.
namespace rcomm::text {

std::string_view trim(std::string_view s);

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

// Parses "<prefix><index>" or "<prefix><index>^<power>"; power defaults to 1.
std::pair<int, int> parse_symbol(std::string_view s, char prefix);

}  // namespace rcomm::text

#endif  // RCOMM_TEXT_HPP
