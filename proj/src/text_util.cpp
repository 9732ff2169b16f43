#include "a11yc/text_util.hpp"

#include <cctype>

namespace a11yc::text {

namespace {

bool is_space(unsigned char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool boundary_before(std::string_view s, std::size_t pos) {
  return pos == 0 || !is_word_byte(static_cast<unsigned char>(s[pos - 1]));
}

bool boundary_after(std::string_view s, std::size_t end) {
  return end >= s.size() || !is_word_byte(static_cast<unsigned char>(s[end]));
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_space(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string squash(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (is_space(u)) continue;
    out.push_back(u < 0x80 ? static_cast<char>(std::tolower(u)) : c);
  }
  return out;
}

bool is_word_byte(unsigned char c) noexcept {
  return c >= 0x80 || std::isalnum(c);
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (is_word_byte(u)) {
      cur.push_back(u < 0x80 ? static_cast<char>(std::tolower(u)) : c);
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::size_t find_word(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return std::string_view::npos;
  std::size_t pos = haystack.find(needle);
  while (pos != std::string_view::npos) {
    if (boundary_before(haystack, pos) && boundary_after(haystack, pos + needle.size())) {
      return pos;
    }
    pos = haystack.find(needle, pos + 1);
  }
  return std::string_view::npos;
}

bool contains_word(std::string_view haystack, std::string_view needle) {
  return find_word(haystack, needle) != std::string_view::npos;
}

std::size_t utf8_length(std::string_view s) noexcept {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::size_t utf8_offset(std::string_view s, std::size_t cp) noexcept {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      if (seen == cp) return i;
      ++seen;
    }
  }
  return s.size();
}

std::size_t utf8_index(std::string_view s, std::size_t byte) noexcept {
  return utf8_length(s.substr(0, byte));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace a11yc::text
