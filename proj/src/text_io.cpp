#include "fibersig/text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fibersig/errors.hpp"

namespace fibersig {

std::vector<TextLine> tokenize_lines(std::string_view text) {
    std::vector<TextLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        TextLine line{number, {}};
        for (std::string w; in >> w;) line.words.push_back(std::move(w));
        if (!line.words.empty()) lines.push_back(std::move(line));
        pos = end + 1;
    }
    return lines;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::int64_t parse_integer(std::string_view word, int line) {
    std::string_view digits = word;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || ec != std::errc{} || ptr != last)
        throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
    return value;
}

std::string signed_string(std::int64_t value) {
    return value > 0 ? "+" + std::to_string(value) : std::to_string(value);
}

}  // namespace fibersig
