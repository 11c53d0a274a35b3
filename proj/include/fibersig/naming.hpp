#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibersig/kinds.hpp"

namespace fibersig {

// Superscript tokens of connected classes: digit strings ("0", "18") or single letters.
// Digit tokens order before letters, digits numerically, letters alphabetically.
bool token_less(const std::string& a, const std::string& b);
void sort_tokens(std::vector<std::string>& tokens);

class TokenTable {
public:
    void add(const std::string& token, int codimension);
    bool contains(const std::string& token) const { return codims_.count(token) != 0; }
    int codimension(const std::string& token) const;  // throws DomainError
    std::vector<std::string> tokens() const;          // sorted by token_less

private:
    std::map<std::string, int> codims_;
};

// Connected-class tokens of the built-in catalog.
const TokenTable& builtin_tokens(DimensionPair dim);

std::string_view kappa_prefix(int kappa);  // "I".."IV"

// Prefix by kappa, sorted tokens joined by commas; braces unless the superscript is a
// single character. Throws DomainError on kappa outside 1..4, an empty or unknown
// token, or a token codimension sum different from kappa.
std::string make_name(std::vector<std::string> tokens, int kappa, const TokenTable& table);
std::string make_name(std::vector<std::string> tokens, int kappa, DimensionPair dim);

struct ParsedName {
    int kappa = 0;
    std::vector<std::string> tokens;
};

// Accepts "III^8", "II^{0,1}", "IV^18", "IV^{18}"; tokens returned sorted.
std::optional<ParsedName> parse_name(std::string_view name);
// Canonical spelling (e.g. "IV^18" -> "IV^{18}"); "regular" maps to itself.
std::optional<std::string> normalize_name(std::string_view name);

// All multisets of at least two tokens whose codimensions sum to kappa, each sorted,
// in lexicographic order of token sequences.
std::vector<std::vector<std::string>> disconnected_token_multisets(const TokenTable& table, int kappa);

// Names of all disconnected classes of codimension kappa (2..4).
std::vector<std::string> enumerate_disconnected(DimensionPair dim, int kappa);
std::vector<std::string> enumerate_disconnected(const TokenTable& table, int kappa);

}  // namespace fibersig
