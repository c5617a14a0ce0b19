#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eatxt::detail {

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t previous = row[j];
            std::size_t substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, substitution});
            diagonal = previous;
        }
    }
    return row[b.size()];
}

/// Unique candidate within edit distance 2, if any.
inline std::optional<std::string> suggest(std::string_view word,
                                          std::span<const std::string_view> candidates) {
    constexpr std::size_t kMaxDistance = 2;
    std::optional<std::string> best;
    std::size_t best_distance = kMaxDistance + 1;
    bool ambiguous = false;
    for (std::string_view candidate : candidates) {
        std::size_t d = levenshtein(word, candidate);
        if (d < best_distance) {
            best = std::string(candidate);
            best_distance = d;
            ambiguous = false;
        } else if (d == best_distance) {
            ambiguous = true;
        }
    }
    if (best_distance > kMaxDistance || ambiguous)
        return std::nullopt;
    return best;
}

} // namespace eatxt::detail
