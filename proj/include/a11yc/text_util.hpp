#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace a11yc::text {

// ASCII-only lowercasing; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

// Collapses every run of ASCII whitespace to one space and trims both ends.
std::string normalize_whitespace(std::string_view s);

// Lowercase with all whitespace removed.
std::string squash(std::string_view s);

bool is_word_byte(unsigned char c) noexcept;

// Lowercases, turns every non-word byte into a separator and splits.
// Bytes >= 0x80 count as word bytes so multi-byte letters stay intact.
std::vector<std::string> tokenize(std::string_view s);

// True if `needle` occurs in `haystack` with word boundaries on both sides.
// Both arguments are expected to be lowercase already.
bool contains_word(std::string_view haystack, std::string_view needle);

// Index of the first whole-word occurrence, or npos.
std::size_t find_word(std::string_view haystack, std::string_view needle);

// Number of UTF-8 code points (continuation bytes are not counted).
std::size_t utf8_length(std::string_view s) noexcept;

// Byte offset of the code point with index `cp`, clamped to s.size().
std::size_t utf8_offset(std::string_view s, std::size_t cp) noexcept;

// Code point index of the byte offset `byte` (which must be a boundary).
std::size_t utf8_index(std::string_view s, std::size_t byte) noexcept;

std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace a11yc::text
