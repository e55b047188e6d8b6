#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace okapi {

/// One normalized term produced by the analyzer.
struct Token {
    std::string text;       // lowercased, never empty
    std::size_t position;   // 0-based ordinal within the field
};

/// Splits text into lowercased alphanumeric runs. Bytes outside ASCII are
/// treated as word characters, so UTF-8 sequences stay intact. No stemming,
/// no stopwords. The token count of a field is the field length used by
/// the scoring functions, so this must be applied identically at index
/// time and query time.
std::vector<Token> tokenize(std::string_view text);

/// Token texts only.
std::vector<std::string> tokenize_terms(std::string_view text);

}  // namespace okapi
