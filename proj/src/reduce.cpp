#include "a11yc/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "a11yc/text_util.hpp"

namespace a11yc {

std::vector<UiElement> remove_noise(std::span<const UiElement> elements, ScreenSize screen,
                                    const NoiseConfig& cfg) {
  std::vector<UiElement> out;
  out.reserve(elements.size());
  for (const auto& e : elements) {
    auto c = e.center();
    if (c.cx < 0 || c.cx > screen.w || c.cy < 0 || c.cy > screen.h) continue;
    bool zero_area = e.bbox.w == 0 || e.bbox.h == 0;
    if (zero_area && normalize_strings(e.content.name).empty() &&
        normalize_strings(e.content.text).empty()) {
      continue;
    }
    if (cfg.os_metadata_tags.count(e.content.tag)) continue;
    out.push_back(e);
  }
  return out;
}

int tag_priority(std::string_view tag, const DedupConfig& cfg) {
  auto it = cfg.priority_table.find(std::string(tag));
  return it == cfg.priority_table.end() ? cfg.default_priority : it->second;
}

std::string normalize_strings(std::string_view s) { return text::normalize_whitespace(s); }

UiElement normalize_element(UiElement e) {
  auto& c = e.content;
  c.name = normalize_strings(c.name);
  c.text = normalize_strings(c.text);
  c.cls = normalize_strings(c.cls);
  c.description = normalize_strings(c.description);
  return e;
}

// ---------------------------------------------------------------------------
// Deduplication
// ---------------------------------------------------------------------------

namespace {

std::size_t label_length(const UiElement& e) {
  return text::utf8_length(text::normalize_whitespace(e.label()));
}

bool semantically_similar(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  const auto sa = text::squash(a.label());
  const auto sb = text::squash(b.label());
  if (sa.empty() || sb.empty()) return false;
  if (sa != sb && sa.find(sb) == std::string::npos && sb.find(sa) == std::string::npos) {
    return false;
  }
  auto la = static_cast<double>(label_length(a));
  auto lb = static_cast<double>(label_length(b));
  return std::max(la, lb) <= cfg.over_merge_length_ratio * std::min(la, lb);
}

bool spatially_close(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  auto ca = a.center();
  auto cb = b.center();
  if (distance(ca, cb) <= cfg.proximity_threshold) return true;
  const auto sa = text::squash(a.label());
  return !sa.empty() && sa == text::squash(b.label()) &&
         std::abs(ca.cy - cb.cy) <= cfg.name_match_y_tolerance;
}

}  // namespace

bool is_duplicate_pair(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  return spatially_close(a, b, cfg) && semantically_similar(a, b, cfg);
}

bool dedup_prefers(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  const auto& ta = a.content.tag;
  const auto& tb = b.content.tag;
  if (ta == cfg.link_tag && tb == cfg.static_tag) return true;
  if (tb == cfg.link_tag && ta == cfg.static_tag) return false;
  int pa = tag_priority(ta, cfg);
  int pb = tag_priority(tb, cfg);
  if (pa != pb) return pa < pb;
  auto la = label_length(a);
  auto lb = label_length(b);
  if (la != lb) return la > lb;
  return a.id < b.id;
}

std::vector<UiElement> dedup(std::span<const UiElement> elements, const DedupConfig& cfg) {
  const std::size_t n = elements.size();
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && !removed[i]; ++j) {
      if (removed[j] || !is_duplicate_pair(elements[i], elements[j], cfg)) continue;
      if (dedup_prefers(elements[i], elements[j], cfg)) {
        removed[j] = true;
      } else {
        removed[i] = true;
      }
    }
  }
  std::vector<UiElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) out.push_back(elements[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paragraph compression
// ---------------------------------------------------------------------------

std::set<std::string> extract_keywords(std::string_view instruction, const ParagraphConfig& cfg) {
  std::set<std::string> out;
  for (auto& tok : text::tokenize(instruction)) {
    if (text::utf8_length(tok) < cfg.min_keyword_len) continue;
    if (cfg.stop_words.count(tok)) continue;
    out.insert(std::move(tok));
  }
  return out;
}

std::string compress_paragraph(std::string_view body, const std::set<std::string>& keywords,
                               const ParagraphConfig& cfg) {
  const auto lowered = text::to_lower(body);
  std::size_t best = std::string::npos;
  std::string_view best_kw;
  for (const auto& kw : keywords) {
    auto pos = text::find_word(lowered, kw);
    if (pos < best) {
      best = pos;
      best_kw = kw;
    }
  }

  const std::size_t total = text::utf8_length(body);
  if (best == std::string::npos) {
    if (total <= cfg.max_head_chars) return std::string(body);
    return std::string(body.substr(0, text::utf8_offset(body, cfg.max_head_chars))) + "...";
  }

  const std::size_t kw_start = text::utf8_index(body, best);
  const std::size_t kw_end = kw_start + text::utf8_length(best_kw);
  const std::size_t from = kw_start > cfg.window_chars ? kw_start - cfg.window_chars : 0;
  const std::size_t to = std::min(total, kw_end + cfg.window_chars);
  const auto b0 = text::utf8_offset(body, from);
  const auto b1 = text::utf8_offset(body, to);

  std::string out;
  if (from > 0) out += "... ";
  out += body.substr(b0, b1 - b0);
  if (to < total) out += " ...";
  return out;
}

// ---------------------------------------------------------------------------
// Attribute compression and the full reduction
// ---------------------------------------------------------------------------

std::optional<CompactElement> compress_attributes(const UiElement& e, const Config& cfg) {
  const auto& c = e.content;
  CompactElement out;
  out.id = e.id;
  out.tag = c.tag;
  out.center = e.center();
  if (!c.name.empty()) {
    out.name = c.name;
    if (cfg.paragraph.value_tags.count(c.tag) && c.text != c.name) out.text = c.text;
  } else {
    out.name = c.text;
  }
  if (out.name.empty() && tag_priority(c.tag, cfg.dedup) > 10) return std::nullopt;
  return out;
}

std::vector<CompactElement> reduce_elements(std::span<const UiElement> elements, ScreenSize screen,
                                            const std::set<std::string>& keywords,
                                            const Config& cfg) {
  auto kept = remove_noise(elements, screen, cfg.noise);
  for (auto& e : kept) e = normalize_element(std::move(e));
  kept = dedup(kept, cfg.dedup);

  std::vector<CompactElement> out;
  out.reserve(kept.size());
  for (auto& e : kept) {
    if (cfg.paragraph.paragraph_tags.count(e.content.tag)) {
      e.content.name = compress_paragraph(e.content.name, keywords, cfg.paragraph);
      e.content.text = compress_paragraph(e.content.text, keywords, cfg.paragraph);
    }
    if (auto c = compress_attributes(e, cfg)) out.push_back(std::move(*c));
  }
  return out;
}

ReducedPartition reduce(const ModalPartition& partition, ScreenSize screen,
                        std::string_view instruction, const Config& cfg) {
  const auto keywords = extract_keywords(instruction, cfg.paragraph);
  ReducedPartition out;
  out.method = partition.method;
  out.modal = reduce_elements(partition.modal, screen, keywords, cfg);
  out.background = reduce_elements(partition.background, screen, keywords, cfg);
  return out;
}

}  // namespace a11yc
