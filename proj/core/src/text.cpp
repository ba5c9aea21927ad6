#include "wsreg/text.hpp"

#include <unordered_set>

namespace wsreg {

namespace {

constexpr bool is_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr char to_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

} // namespace

std::vector<std::string> tokenize(std::string_view input) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : input) {
        if (is_alnum(c)) {
            current.push_back(to_lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

std::vector<std::string> unique_tokens(std::string_view input) {
    std::vector<std::string> tokens = tokenize(input);
    std::unordered_set<std::string> seen;
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& t : tokens) {
        if (seen.insert(t).second) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace wsreg
