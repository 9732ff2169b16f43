#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a11yc {

// Geometry is integer pixels throughout; fractional input is rounded at parse time.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const BoundingBox&) const = default;
};

struct CenterPoint {
  int cx = 0;
  int cy = 0;

  bool operator==(const CenterPoint&) const = default;
};

// Halves round to the nearest pixel, ties toward +inf: (10,10,5,5) -> (13,13).
CenterPoint center_of(const BoundingBox& b) noexcept;

double distance(CenterPoint a, CenterPoint b) noexcept;

struct ScreenSize {
  int w = 0;
  int h = 0;
};

// Field-wise equality of this struct is what temporal matching pairs on.
struct SemanticContent {
  std::string tag;  // lowercased role
  std::string name;
  std::string text;
  std::string cls;
  std::string description;

  bool operator==(const SemanticContent&) const = default;
};

enum class RegionKind { Static, Dynamic };

std::string_view to_string(RegionKind k) noexcept;

struct RegionHint {
  std::string region;
  RegionKind kind = RegionKind::Dynamic;
};

struct UiElement {
  int id = 0;
  SemanticContent content;
  BoundingBox bbox;
  std::optional<RegionHint> region_hint;

  CenterPoint center() const noexcept { return center_of(bbox); }
  // name, or text when the name is empty
  const std::string& label() const noexcept {
    return content.name.empty() ? content.text : content.name;
  }
  bool is_dynamic() const noexcept {
    return !region_hint || region_hint->kind == RegionKind::Dynamic;
  }
};

struct ScreenState {
  std::vector<UiElement> elements;
  int screen_w = 0;
  int screen_h = 0;
  int step = 0;

  ScreenSize size() const noexcept { return {screen_w, screen_h}; }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  enum class Kind { MissingHeader, EmptyDocument, Io };

  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct ParseWarning {
  int line_no = 0;  // 1-based
  std::string reason;
};

struct ParseResult {
  ScreenState state;
  std::vector<ParseWarning> warnings;
};

// Input format:
//   screen <W> <H>
//   tag \t name \t text \t class|description \t x \t y \t w \t h
// Malformed element lines land in `warnings` and parsing continues.
ParseResult parse_tree(std::string_view raw);

ParseResult read_tree_file(const std::string& path);

// ---------------------------------------------------------------------------
// Compressed output
// ---------------------------------------------------------------------------

// What survives attribute compression: role, display label, an optional
// value text, and the center point.
struct CompactElement {
  int id = 0;
  std::string tag;
  std::string name;
  std::string text;
  CenterPoint center;

  bool operator==(const CompactElement&) const = default;
};

struct SemanticRegion {
  std::string name;
  RegionKind kind = RegionKind::Dynamic;
  std::vector<CompactElement> elements;
  // Sizes of consecutive blocks; they sum to elements.size().
  std::vector<std::size_t> block_sizes;

  std::vector<std::span<const CompactElement>> blocks() const;
  bool operator==(const SemanticRegion&) const = default;
};

struct CompressedObservation {
  std::optional<SemanticRegion> modal;
  std::vector<SemanticRegion> regions;
  std::size_t source_chars = 0;
  std::size_t output_chars = 0;
  std::size_t output_words = 0;
  std::size_t output_token_estimate = 0;

  bool operator==(const CompressedObservation&) const = default;
};

enum class OutputFormat { Text, Structured };

// Canonical text rendering; output_chars is the byte length of this string.
std::string render_text(const CompressedObservation& obs);

std::string serialize(const CompressedObservation& obs, OutputFormat format);

// Inverse of serialize(obs, Structured). Throws std::invalid_argument.
CompressedObservation parse_structured(std::string_view doc);

std::size_t count_words(std::string_view s) noexcept;

}  // namespace a11yc
