#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibersig {

struct TextLine {
    int number = 0;
    std::vector<std::string> words;
};

// Splits into whitespace-separated words; '#' starts a comment; blank lines are dropped.
std::vector<TextLine> tokenize_lines(std::string_view text);

std::string read_text_file(const std::string& path);

// Accepts an optional leading '+' or '-'. Throws ParseError on anything else.
std::int64_t parse_integer(std::string_view word, int line);

std::string signed_string(std::int64_t value);  // "+1", "-2", "0"

}  // namespace fibersig
