#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tierfact::util {

std::string to_lower_ascii(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

/// Replaces every occurrence of `from` in `s` with `to`.
std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to);

bool is_valid_utf8(std::string_view s);

/// Decodes the UTF-8 code point starting at byte offset `pos`; advances `pos`
/// past it. Invalid bytes decode as U+FFFD and advance by one.
char32_t decode_utf8(std::string_view s, size_t& pos);

void append_utf8(std::string& out, char32_t cp);

/// CJK unified ideographs plus the common extension blocks. Fullwidth
/// punctuation is not included.
bool is_cjk(char32_t cp);

/// Parses a decimal number that may carry comma thousands separators
/// ("1,885" or "1,234.5"). Returns false on malformed input.
bool parse_separated_number(std::string_view s, double& out);

/// Percent-encodes everything outside RFC 3986 unreserved characters.
std::string url_encode(std::string_view s);

}  // namespace tierfact::util
