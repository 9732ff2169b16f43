#include "a11yc/structure.hpp"

#include <cmath>
#include <map>

#include "a11yc/clustering.hpp"
#include "a11yc/modal.hpp"
#include "a11yc/text_util.hpp"

namespace a11yc {

namespace {

bool has_phrase(const std::string& lowered_name, const std::string& lowered_text,
                const std::string& phrase) {
  return text::contains_word(lowered_name, phrase) || text::contains_word(lowered_text, phrase);
}

}  // namespace

CompactElement compact_view(const UiElement& e) {
  CompactElement c;
  c.id = e.id;
  c.tag = e.content.tag;
  c.name = e.label();
  if (!e.content.name.empty()) c.text = e.content.text;
  c.center = e.center();
  return c;
}

// ---------------------------------------------------------------------------
// detect_app
// ---------------------------------------------------------------------------

std::vector<AppScore> score_apps(const ScreenState& state, const ProfileSet& profiles) {
  std::vector<std::pair<std::string, std::string>> lowered;
  lowered.reserve(state.elements.size());
  for (const auto& e : state.elements) {
    lowered.emplace_back(text::to_lower(e.content.name), text::to_lower(e.content.text));
  }

  std::vector<AppScore> scores;
  for (AppId app : kAllApps) {
    const auto& profile = profiles.get(app);
    AppScore s{app, 0};
    for (const auto& anchor : profile.detect_anchors) {
      const auto a = text::to_lower(anchor);
      for (const auto& [name, body] : lowered) {
        if (has_phrase(name, body, a)) {
          ++s.score;
          break;
        }
      }
    }
    for (const auto& pattern : profile.detect_patterns) {
      int hits = 0;
      for (const auto& e : state.elements) {
        if (std::regex_match(e.content.name, pattern.regex)) ++hits;
      }
      if (hits >= pattern.min_count) s.score += pattern.weight;
    }
    scores.push_back(s);
  }
  return scores;
}

AppId detect_app(const ScreenState& state, const ProfileSet& profiles) {
  AppScore best{AppId::Generic, 0};
  for (const auto& s : score_apps(state, profiles)) {
    if (s.score > best.score) best = s;
  }
  return best.app;
}

// ---------------------------------------------------------------------------
// Segmentation
// ---------------------------------------------------------------------------

const std::vector<RegionRule>& select_rules(const RegionProfile& profile,
                                            std::span<const CompactElement> elements) {
  std::vector<std::pair<std::string, std::string>> lowered;
  for (const auto& e : elements) lowered.emplace_back(text::to_lower(e.name), text::to_lower(e.text));
  auto present = [&](const std::string& phrase) {
    const auto p = text::to_lower(phrase);
    return std::any_of(lowered.begin(), lowered.end(),
                       [&](const auto& l) { return has_phrase(l.first, l.second, p); });
  };

  for (const auto& view : profile.views) {
    if (std::any_of(view.exclude_anchors.begin(), view.exclude_anchors.end(), present)) continue;
    auto hits = std::count_if(view.trigger_anchors.begin(), view.trigger_anchors.end(), present);
    if (hits >= view.min_trigger) return view.rules;
  }
  return profile.rules;
}

std::optional<int> estimate_split_x(std::span<const CompactElement> elements, ScreenSize screen) {
  // Central band: right of the folder tree, below the toolbar.
  std::vector<int> xs;
  for (const auto& e : elements) {
    if (e.center.cx >= 400 && e.center.cy >= 0.10 * screen.h) xs.push_back(e.center.cx);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) return std::nullopt;

  int best_gap = 0;
  int split = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    int gap = xs[i] - xs[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      split = xs[i - 1] + gap / 2;
    }
  }
  if (best_gap < 0.05 * screen.w) return std::nullopt;
  if (split < 0.30 * screen.w || split > 0.80 * screen.w) return std::nullopt;
  return split;
}

namespace {

std::vector<RegionRule> with_dynamic_split(std::vector<RegionRule> rules, int split) {
  using C = BandCondition;
  for (auto& r : rules) {
    C::Op op;
    if (r.region == "MESSAGE_LIST") {
      op = C::Op::Lt;
    } else if (r.region == "PREVIEW") {
      op = C::Op::Ge;
    } else {
      continue;
    }
    std::erase_if(r.band, [](const C& c) { return c.axis == C::Axis::X; });
    r.band.push_back(C{C::Axis::X, op, static_cast<double>(split), C::Unit::Px});
  }
  return rules;
}

bool has_window_control(const CompactElement& e) {
  const auto l = text::to_lower(e.name);
  return text::contains_word(l, "close") || text::contains_word(l, "minimize") ||
         text::contains_word(l, "minimise") || l.find("×") != std::string::npos;
}

bool anchor_row_match(const CompactElement& e, const RegionRule& rule,
                      std::span<const CompactElement> elements, ScreenSize screen) {
  for (const auto& a : elements) {
    if (!rule.in_band(a.center, screen)) continue;
    if (std::abs(a.center.cy - e.center.cy) > rule.anchor_row_px) continue;
    const auto name = text::to_lower(a.name);
    const auto body = text::to_lower(a.text);
    for (const auto& anchor : rule.anchors) {
      if (name.find(anchor) != std::string::npos || body.find(anchor) != std::string::npos) {
        return true;
      }
    }
  }
  return false;
}

SemanticRegion make_region(const std::string& name, RegionKind kind,
                           std::vector<CompactElement> elements) {
  SemanticRegion r;
  r.name = name;
  r.kind = kind;
  r.elements = reorder_elements(std::move(elements));
  if (!r.elements.empty()) r.block_sizes = {r.elements.size()};
  return r;
}

}  // namespace

std::vector<SemanticRegion> segment_regions(std::span<const CompactElement> elements,
                                            ScreenSize screen, const RegionProfile& profile,
                                            const KeywordDetectConfig& keyword_cfg) {
  const auto* rules = &select_rules(profile, elements);
  std::vector<RegionRule> split_rules;
  if (profile.app == AppId::Thunderbird && rules == &profile.rules) {
    if (auto split = estimate_split_x(elements, screen)) {
      split_rules = with_dynamic_split(profile.rules, *split);
      rules = &split_rules;
    }
  }

  const std::size_t n = elements.size();
  std::vector<bool> taken(n, false);
  std::vector<SemanticRegion> out;

  for (const auto& rule : *rules) {
    std::vector<std::size_t> reach;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i] || !rule.in_band(elements[i].center, screen)) continue;
      if (!rule.tags.empty() &&
          std::find(rule.tags.begin(), rule.tags.end(), elements[i].tag) == rule.tags.end()) {
        continue;
      }
      if (!rule.anchors.empty() && !anchor_row_match(elements[i], rule, elements, screen)) continue;
      reach.push_back(i);
    }

    if (rule.detect_windows) {
      std::vector<CenterPoint> points;
      for (auto i : reach) points.push_back(elements[i].center);
      int k = 0;
      for (const auto& cl : cluster_by_distance(points, cluster_delta(screen, keyword_cfg))) {
        bool window = std::any_of(cl.begin(), cl.end(),
                                  [&](std::size_t c) { return has_window_control(elements[reach[c]]); });
        if (!window) continue;
        std::vector<CompactElement> members;
        for (auto c : cl) {
          members.push_back(elements[reach[c]]);
          taken[reach[c]] = true;
        }
        out.push_back(make_region(rule.region + "_" + std::to_string(++k), rule.kind,
                                  std::move(members)));
      }
      continue;
    }

    std::vector<CompactElement> members;
    for (auto i : reach) {
      members.push_back(elements[i]);
      taken[i] = true;
    }
    out.push_back(make_region(rule.region, rule.kind, std::move(members)));
  }
  return out;
}

void annotate_regions(ScreenState& state, const RegionProfile& profile,
                      const KeywordDetectConfig& keyword_cfg) {
  std::vector<CompactElement> views;
  views.reserve(state.elements.size());
  for (const auto& e : state.elements) views.push_back(compact_view(e));

  std::map<int, RegionHint> hints;
  for (const auto& r : segment_regions(views, state.size(), profile, keyword_cfg)) {
    for (const auto& e : r.elements) hints[e.id] = RegionHint{r.name, r.kind};
  }
  for (auto& e : state.elements) e.region_hint = hints.at(e.id);
}

// ---------------------------------------------------------------------------
// Blocks and Θ
// ---------------------------------------------------------------------------

double estimate_base_gap(std::span<const CompactElement> elements, const ThetaConfig& cfg) {
  if (elements.size() < 2) throw TooFewElements();
  std::vector<double> gaps;
  gaps.reserve(elements.size() - 1);
  for (std::size_t i = 1; i < elements.size(); ++i) {
    gaps.push_back(std::abs(elements[i].center.cy - elements[i - 1].center.cy));
  }
  std::sort(gaps.begin(), gaps.end());
  // The epsilon keeps 0.7 * 10 from rounding up to 8.
  auto keep = static_cast<std::size_t>(std::ceil(cfg.quantile * gaps.size() - 1e-9));
  keep = std::clamp<std::size_t>(keep, 1, gaps.size());
  double median = keep % 2 ? gaps[keep / 2] : (gaps[keep / 2 - 1] + gaps[keep / 2]) / 2.0;
  return std::max(median, cfg.floor_px);
}

std::set<std::string> heading_tags(const DedupConfig& cfg) {
  std::set<std::string> out;
  for (const auto& [tag, score] : cfg.priority_table) {
    if (score == 20) out.insert(tag);
  }
  return out;
}

std::vector<std::size_t> split_blocks(std::span<const CompactElement> elements, double theta,
                                      const std::set<std::string>& boundary_tags) {
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    bool open = i == 0 || distance(elements[i - 1].center, elements[i].center) > theta ||
                boundary_tags.count(elements[i].tag);
    if (open) {
      blocks.push_back(1);
    } else {
      ++blocks.back();
    }
  }
  return blocks;
}

bool over_segmented(std::span<const std::size_t> blocks, const ThetaConfig& cfg) {
  const auto b = blocks.size();
  if (b > static_cast<std::size_t>(cfg.max_blocks)) return true;
  const auto singles = std::count(blocks.begin(), blocks.end(), std::size_t{1});
  return b > static_cast<std::size_t>(cfg.frag_block_min) &&
         static_cast<double>(singles) > cfg.frag_singleton_ratio * static_cast<double>(b);
}

ThetaChoice select_theta(std::span<const CompactElement> elements, double base_gap,
                         const ThetaConfig& cfg, const std::set<std::string>& boundary_tags) {
  ThetaChoice choice;
  for (double m : cfg.multipliers) {
    choice.multiplier = m;
    choice.theta = base_gap * m;
    choice.blocks = split_blocks(elements, choice.theta, boundary_tags);
    if (!over_segmented(choice.blocks, cfg)) return choice;
  }
  choice.fallback = true;
  return choice;
}

void structure_region(SemanticRegion& region, const ThetaConfig& cfg,
                      const std::set<std::string>& boundary_tags) {
  region.elements = reorder_elements(std::move(region.elements));
  const auto n = region.elements.size();
  if (n == 0) {
    region.block_sizes.clear();
  } else if (n == 1) {
    region.block_sizes = {1};
  } else {
    double g = estimate_base_gap(region.elements, cfg);
    region.block_sizes = select_theta(region.elements, g, cfg, boundary_tags).blocks;
  }
}

// ---------------------------------------------------------------------------
// Spreadsheet
// ---------------------------------------------------------------------------

std::optional<std::pair<int, int>> parse_cell_name(std::string_view name) {
  std::size_t i = 0;
  long col = 0;
  while (i < name.size() && name[i] >= 'A' && name[i] <= 'Z') {
    col = col * 26 + (name[i] - 'A' + 1);
    ++i;
  }
  if (i == 0 || i > 3) return std::nullopt;
  const std::size_t digits = name.size() - i;
  if (digits == 0 || digits > 7) return std::nullopt;
  long row = 0;
  for (; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return std::nullopt;
    row = row * 10 + (name[i] - '0');
  }
  if (row == 0) return std::nullopt;
  return std::pair{static_cast<int>(row), static_cast<int>(col)};
}

SemanticRegion optimize_spreadsheet(const SemanticRegion& region,
                                    const std::set<std::string>& keywords) {
  struct Cell {
    int row;
    int col;
    const CompactElement* e;
  };
  std::vector<Cell> cells;
  std::vector<CompactElement> others;
  for (const auto& e : region.elements) {
    if (auto rc = parse_cell_name(e.name)) {
      cells.push_back({rc->first, rc->second, &e});
    } else {
      others.push_back(e);
    }
  }

  int min_row = 0, max_row = -1, min_col = 0, max_col = -1;
  bool any_value = false;
  for (const auto& c : cells) {
    if (c.e->text.empty()) continue;
    if (!any_value) {
      min_row = max_row = c.row;
      min_col = max_col = c.col;
      any_value = true;
    }
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
    max_col = std::max(max_col, c.col);
  }

  auto keyword_hit = [&](const CompactElement& e) {
    const auto name = text::to_lower(e.name);
    const auto body = text::to_lower(e.text);
    return std::any_of(keywords.begin(), keywords.end(), [&](const std::string& k) {
      return name.find(k) != std::string::npos || body.find(k) != std::string::npos;
    });
  };

  std::map<int, std::vector<Cell>> rows;
  for (const auto& c : cells) {
    bool keep = !c.e->text.empty() || keyword_hit(*c.e);
    if (!keep && any_value) {
      bool in_extent = c.row >= min_row && c.row <= max_row && c.col >= min_col && c.col <= max_col;
      keep = in_extent && (c.row == min_row || c.col == min_col);
    }
    if (keep) rows[c.row].push_back(c);
  }

  SemanticRegion out;
  out.name = region.name;
  out.kind = region.kind;
  for (auto& [row, list] : rows) {
    std::stable_sort(list.begin(), list.end(), [](const Cell& a, const Cell& b) { return a.col < b.col; });
    for (const auto& c : list) out.elements.push_back(*c.e);
    out.block_sizes.push_back(list.size());
  }
  if (!others.empty()) {
    others = reorder_elements(std::move(others));
    out.block_sizes.push_back(others.size());
    for (auto& e : others) out.elements.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

CompressedObservation assemble(std::optional<SemanticRegion> modal,
                               std::vector<SemanticRegion> regions, std::size_t source_chars) {
  CompressedObservation obs;
  if (modal && !modal->elements.empty()) {
    modal->name = "MODAL";
    obs.modal = std::move(modal);
  }
  for (auto& r : regions) {
    if (!r.elements.empty()) obs.regions.push_back(std::move(r));
  }
  obs.source_chars = source_chars;
  const auto text = render_text(obs);
  obs.output_chars = text.size();
  obs.output_words = count_words(text);
  obs.output_token_estimate = (obs.output_chars + 3) / 4;
  return obs;
}

CompressedObservation structure_observation(const ReducedPartition& reduced, ScreenSize screen,
                                            AppId app, const std::set<std::string>& keywords,
                                            std::size_t source_chars, const Config& cfg) {
  const auto boundary = heading_tags(cfg.dedup);
  auto regions = segment_regions(reduced.background, screen, cfg.profiles.get(app), cfg.keyword);
  for (auto& r : regions) {
    if (app == AppId::Calc && r.name == "SHEET") {
      r = optimize_spreadsheet(r, keywords);
    } else {
      structure_region(r, cfg.theta, boundary);
    }
  }

  std::optional<SemanticRegion> modal;
  if (!reduced.modal.empty()) {
    modal = SemanticRegion{"MODAL", RegionKind::Dynamic, reduced.modal, {}};
    structure_region(*modal, cfg.theta, boundary);
  }
  return assemble(std::move(modal), std::move(regions), source_chars);
}

}  // namespace a11yc
