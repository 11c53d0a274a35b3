#include "fibersig/naming.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "fibersig/errors.hpp"

namespace fibersig {

namespace {

bool is_digit_token(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_letter_token(const std::string& t) {
    return t.size() == 1 && t[0] >= 'a' && t[0] <= 'z';
}

}  // namespace

bool token_less(const std::string& a, const std::string& b) {
    bool da = is_digit_token(a), db = is_digit_token(b);
    if (da != db) return da;
    if (da && a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_tokens(std::vector<std::string>& tokens) { std::sort(tokens.begin(), tokens.end(), token_less); }

void TokenTable::add(const std::string& token, int codimension) { codims_[token] = codimension; }

int TokenTable::codimension(const std::string& token) const {
    auto it = codims_.find(token);
    if (it == codims_.end()) throw DomainError("token '" + token + "' names no connected catalog class");
    return it->second;
}

std::vector<std::string> TokenTable::tokens() const {
    std::vector<std::string> out;
    for (const auto& [t, c] : codims_) out.push_back(t);
    sort_tokens(out);
    return out;
}

std::string_view kappa_prefix(int kappa) {
    static constexpr std::string_view prefixes[] = {"I", "II", "III", "IV"};
    if (kappa < 1 || kappa > 4) throw DomainError("codimension " + std::to_string(kappa) + " outside 1..4");
    return prefixes[kappa - 1];
}

std::string make_name(std::vector<std::string> tokens, int kappa, const TokenTable& table) {
    auto prefix = kappa_prefix(kappa);
    if (tokens.empty()) throw DomainError("make_name: empty token multiset");
    int sum = 0;
    for (const auto& t : tokens) sum += table.codimension(t);
    if (sum != kappa)
        throw DomainError("make_name: tokens have total codimension " + std::to_string(sum) + ", not " +
                          std::to_string(kappa));
    sort_tokens(tokens);
    std::string sup;
    for (std::size_t i = 0; i < tokens.size(); ++i) sup += (i ? "," : "") + tokens[i];
    return std::string(prefix) + "^" + (sup.size() == 1 ? sup : "{" + sup + "}");
}

std::string make_name(std::vector<std::string> tokens, int kappa, DimensionPair dim) {
    return make_name(std::move(tokens), kappa, builtin_tokens(dim));
}

std::optional<ParsedName> parse_name(std::string_view name) {
    auto caret = name.find('^');
    if (caret == std::string_view::npos) return std::nullopt;
    auto prefix = name.substr(0, caret);
    ParsedName out;
    for (int k = 1; k <= 4; ++k)
        if (prefix == kappa_prefix(k)) out.kappa = k;
    if (out.kappa == 0) return std::nullopt;
    auto sup = name.substr(caret + 1);
    if (sup.size() >= 2 && sup.front() == '{' && sup.back() == '}') sup = sup.substr(1, sup.size() - 2);
    if (sup.empty()) return std::nullopt;
    std::size_t pos = 0;
    while (pos <= sup.size()) {
        auto comma = sup.find(',', pos);
        if (comma == std::string_view::npos) comma = sup.size();
        std::string token(sup.substr(pos, comma - pos));
        if (!is_digit_token(token) && !is_letter_token(token)) return std::nullopt;
        out.tokens.push_back(token);
        pos = comma + 1;
    }
    sort_tokens(out.tokens);
    return out;
}

std::optional<std::string> normalize_name(std::string_view name) {
    if (name == "regular") return std::string(name);
    auto parsed = parse_name(name);
    if (!parsed) return std::nullopt;
    std::string sup;
    for (std::size_t i = 0; i < parsed->tokens.size(); ++i) sup += (i ? "," : "") + parsed->tokens[i];
    return std::string(kappa_prefix(parsed->kappa)) + "^" + (sup.size() == 1 ? sup : "{" + sup + "}");
}

std::vector<std::vector<std::string>> disconnected_token_multisets(const TokenTable& table, int kappa) {
    if (kappa < 2 || kappa > 4)
        throw DomainError("enumerate_disconnected: codimension " + std::to_string(kappa) + " outside 2..4");
    const auto tokens = table.tokens();
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    // Non-decreasing token index keeps each multiset sorted and unique.
    std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
        if (remaining == 0) {
            if (current.size() >= 2) out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < tokens.size(); ++i) {
            int c = table.codimension(tokens[i]);
            if (c > remaining || c >= kappa) continue;
            current.push_back(tokens[i]);
            extend(i, remaining - c);
            current.pop_back();
        }
    };
    extend(0, kappa);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), token_less);
    });
    return out;
}

std::vector<std::string> enumerate_disconnected(const TokenTable& table, int kappa) {
    std::vector<std::string> names;
    for (auto& m : disconnected_token_multisets(table, kappa)) names.push_back(make_name(m, kappa, table));
    return names;
}

std::vector<std::string> enumerate_disconnected(DimensionPair dim, int kappa) {
    return enumerate_disconnected(builtin_tokens(dim), kappa);
}

}  // namespace fibersig
