#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wsreg {

/// Lowercases `input` and splits it on every non-alphanumeric byte.
/// ASCII-only on purpose: WSDL names and documentation in this toolkit are
/// ASCII, and byte-level rules keep tokenization identical everywhere.
std::vector<std::string> tokenize(std::string_view input);

/// tokenize() plus de-duplication, preserving first-occurrence order.
std::vector<std::string> unique_tokens(std::string_view input);

} // namespace wsreg
