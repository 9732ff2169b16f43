#include "a11yc/model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "a11yc/text_util.hpp"

namespace a11yc {

using json = nlohmann::json;

CenterPoint center_of(const BoundingBox& b) noexcept {
  // x + w/2 with ties toward +inf is x + ceil(w/2) for w >= 0.
  return {b.x + (b.w + 1) / 2, b.y + (b.h + 1) / 2};
}

double distance(CenterPoint a, CenterPoint b) noexcept {
  return std::hypot(static_cast<double>(a.cx - b.cx), static_cast<double>(a.cy - b.cy));
}

std::string_view to_string(RegionKind k) noexcept {
  return k == RegionKind::Static ? "static" : "dynamic";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

std::optional<ScreenSize> parse_header(std::string_view line) {
  auto words = text::split(trim(line), ' ');
  std::erase_if(words, [](std::string_view w) { return w.empty(); });
  if (words.size() != 3 || words[0] != "screen") return std::nullopt;
  auto w = parse_number(words[1]);
  auto h = parse_number(words[2]);
  if (!w || !h) return std::nullopt;
  ScreenSize size{round_half_up(*w), round_half_up(*h)};
  if (size.w <= 0 || size.h <= 0) return std::nullopt;
  return size;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

ParseResult parse_tree(std::string_view raw) {
  ParseResult result;
  auto lines = text::split(raw, '\n');

  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  std::optional<ScreenSize> size;
  if (i < lines.size()) size = parse_header(lines[i]);
  if (!size) throw ParseError(ParseError::Kind::MissingHeader, "missing 'screen <W> <H>' header");
  result.state.screen_w = size->w;
  result.state.screen_h = size->h;

  for (++i; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line)) continue;
    const int line_no = static_cast<int>(i) + 1;

    auto cols = text::split(line, '\t');
    if (cols.size() != 8) {
      result.warnings.push_back({line_no, fmt::format("expected 8 columns, got {}", cols.size())});
      continue;
    }
    std::optional<double> nums[4];
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      nums[k] = parse_number(cols[4 + k]);
      ok = ok && nums[k].has_value();
    }
    if (!ok) {
      result.warnings.push_back({line_no, "non-numeric geometry"});
      continue;
    }
    BoundingBox box{round_half_up(*nums[0]), round_half_up(*nums[1]), round_half_up(*nums[2]),
                    round_half_up(*nums[3])};
    if (box.w < 0 || box.h < 0) {
      result.warnings.push_back({line_no, "negative extent"});
      continue;
    }

    UiElement e;
    e.id = static_cast<int>(result.state.elements.size());
    e.content.tag = text::to_lower(trim(cols[0]));
    e.content.name = std::string(cols[1]);
    e.content.text = std::string(cols[2]);
    std::string_view cls_desc = cols[3];
    if (auto bar = cls_desc.find('|'); bar != std::string_view::npos) {
      e.content.cls = std::string(cls_desc.substr(0, bar));
      e.content.description = std::string(cls_desc.substr(bar + 1));
    } else {
      e.content.cls = std::string(cls_desc);
    }
    e.bbox = box;
    result.state.elements.push_back(std::move(e));
  }

  if (result.state.elements.empty()) {
    throw ParseError(ParseError::Kind::EmptyDocument, "no well-formed element lines");
  }
  return result;
}

ParseResult read_tree_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tree(buf.str());
}

std::vector<std::span<const CompactElement>> SemanticRegion::blocks() const {
  std::vector<std::span<const CompactElement>> out;
  std::size_t start = 0;
  for (auto n : block_sizes) {
    out.emplace_back(elements.data() + start, n);
    start += n;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void render_region(std::string& out, std::string_view header, const SemanticRegion& r) {
  out += header;
  out += '\n';
  bool first = true;
  for (auto block : r.blocks()) {
    if (!first) out += "[BLOCK]\n";
    first = false;
    for (const auto& e : block) {
      out += fmt::format("({}) {}", e.tag, quote(e.name));
      if (!e.text.empty()) {
        out += ' ';
        out += e.text;
      }
      out += fmt::format(" @ ({},{})\n", e.center.cx, e.center.cy);
    }
  }
}

}  // namespace

std::string render_text(const CompressedObservation& obs) {
  std::string out;
  if (obs.modal && !obs.modal->elements.empty()) render_region(out, "[MODAL]", *obs.modal);
  for (const auto& r : obs.regions) {
    if (r.elements.empty()) continue;
    render_region(out, fmt::format("[REGION: {}]", r.name), r);
  }
  if (out.empty()) out = "[EMPTY]\n";
  return out;
}

std::size_t count_words(std::string_view s) noexcept {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : s) {
    bool space = c == ' ' || c == '\n' || c == '\t' || c == '\r';
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Structured rendering
// ---------------------------------------------------------------------------

namespace {

json element_to_json(const CompactElement& e) {
  return json{{"id", e.id},
              {"tag", e.tag},
              {"name", e.name},
              {"text", e.text},
              {"center", json::array({e.center.cx, e.center.cy})}};
}

json region_to_json(const SemanticRegion& r) {
  json elements = json::array();
  for (const auto& e : r.elements) elements.push_back(element_to_json(e));
  return json{{"name", r.name},
              {"kind", std::string(to_string(r.kind))},
              {"elements", std::move(elements)},
              {"block_sizes", r.block_sizes}};
}

CompactElement element_from_json(const json& j) {
  CompactElement e;
  e.id = j.at("id").get<int>();
  e.tag = j.at("tag").get<std::string>();
  e.name = j.at("name").get<std::string>();
  e.text = j.at("text").get<std::string>();
  const auto& c = j.at("center");
  if (!c.is_array() || c.size() != 2) throw std::invalid_argument("center must be [cx, cy]");
  e.center = {c[0].get<int>(), c[1].get<int>()};
  return e;
}

SemanticRegion region_from_json(const json& j) {
  SemanticRegion r;
  r.name = j.at("name").get<std::string>();
  auto kind = j.at("kind").get<std::string>();
  if (kind == "static") {
    r.kind = RegionKind::Static;
  } else if (kind == "dynamic") {
    r.kind = RegionKind::Dynamic;
  } else {
    throw std::invalid_argument("unknown region kind: " + kind);
  }
  for (const auto& e : j.at("elements")) r.elements.push_back(element_from_json(e));
  r.block_sizes = j.at("block_sizes").get<std::vector<std::size_t>>();
  std::size_t total = 0;
  for (auto n : r.block_sizes) total += n;
  if (total != r.elements.size()) throw std::invalid_argument("block_sizes do not cover elements");
  return r;
}

}  // namespace

std::string serialize(const CompressedObservation& obs, OutputFormat format) {
  if (format == OutputFormat::Text) return render_text(obs);

  json regions = json::array();
  for (const auto& r : obs.regions) regions.push_back(region_to_json(r));
  json doc{{"modal", obs.modal ? region_to_json(*obs.modal) : json(nullptr)},
           {"regions", std::move(regions)},
           {"source_chars", obs.source_chars},
           {"output_chars", obs.output_chars},
           {"output_words", obs.output_words},
           {"output_token_estimate", obs.output_token_estimate}};
  return doc.dump(2) + "\n";
}

CompressedObservation parse_structured(std::string_view doc) {
  json j;
  try {
    j = json::parse(doc);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  try {
    CompressedObservation obs;
    if (!j.at("modal").is_null()) obs.modal = region_from_json(j.at("modal"));
    for (const auto& r : j.at("regions")) obs.regions.push_back(region_from_json(r));
    obs.source_chars = j.at("source_chars").get<std::size_t>();
    obs.output_chars = j.at("output_chars").get<std::size_t>();
    obs.output_words = j.at("output_words").get<std::size_t>();
    obs.output_token_estimate = j.at("output_token_estimate").get<std::size_t>();
    return obs;
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace a11yc
