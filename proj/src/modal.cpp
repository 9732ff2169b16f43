#include "a11yc/modal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "a11yc/clustering.hpp"
#include "a11yc/text_util.hpp"

namespace a11yc {

std::string_view to_string(ModalMethod m) noexcept {
  switch (m) {
    case ModalMethod::Temporal: return "temporal";
    case ModalMethod::Keyword: return "keyword";
    case ModalMethod::None: return "none";
  }
  return "none";
}

std::string_view to_string(ScreenVerdict v) noexcept {
  switch (v) {
    case ScreenVerdict::Same: return "same";
    case ScreenVerdict::Different: return "different";
    case ScreenVerdict::BypassSparse: return "bypass_sparse";
  }
  return "different";
}

ModalPartition make_partition(const ScreenState& state, std::span<const int> modal_ids,
                              ModalMethod method) {
  std::set<int> ids(modal_ids.begin(), modal_ids.end());
  ModalPartition p;
  p.method = ids.empty() ? ModalMethod::None : method;
  for (const auto& e : state.elements) {
    (ids.count(e.id) ? p.modal : p.background).push_back(e);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Matching primitives
// ---------------------------------------------------------------------------

std::vector<ElementPair> match_semantic(std::span<const UiElement> prev,
                                        std::span<const UiElement> curr) {
  std::vector<ElementPair> pairs;
  for (std::size_t j = 0; j < prev.size(); ++j) {
    for (std::size_t k = 0; k < curr.size(); ++k) {
      if (prev[j].content == curr[k].content) pairs.push_back({j, k});
    }
  }
  return pairs;
}

bool match_static(Position prev, Position curr, const MatchConfig& cfg) noexcept {
  return std::hypot(prev.x - curr.x, prev.y - curr.y) <= cfg.eps_static;
}

bool match_static(const UiElement& prev, const UiElement& curr, const MatchConfig& cfg) noexcept {
  return match_static(position_of(prev), position_of(curr), cfg);
}

namespace {

int lower_median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v[(v.size() - 1) / 2];
}

}  // namespace

Displacement estimate_global_displacement(std::span<const Displacement> displacements) {
  if (displacements.empty()) throw NoPairsError();
  std::vector<int> xs;
  std::vector<int> ys;
  xs.reserve(displacements.size());
  ys.reserve(displacements.size());
  for (const auto& d : displacements) {
    xs.push_back(d.dx);
    ys.push_back(d.dy);
  }
  return {lower_median(std::move(xs)), lower_median(std::move(ys))};
}

Displacement estimate_global_displacement(std::span<const ElementPair> pairs,
                                          std::span<const UiElement> prev,
                                          std::span<const UiElement> curr) {
  std::vector<Displacement> d;
  d.reserve(pairs.size());
  for (const auto& p : pairs) {
    auto a = prev[p.prev].center();
    auto b = curr[p.curr].center();
    d.push_back({b.cx - a.cx, b.cy - a.cy});
  }
  return estimate_global_displacement(d);
}

bool match_dynamic(Position prev, Position curr, Displacement global,
                   const MatchConfig& cfg) noexcept {
  return std::hypot(prev.x + global.dx - curr.x, prev.y + global.dy - curr.y) <= cfg.eps_dynamic;
}

bool match_dynamic(const UiElement& prev, const UiElement& curr, Displacement global,
                   const MatchConfig& cfg) noexcept {
  return match_dynamic(position_of(prev), position_of(curr), global, cfg);
}

// ---------------------------------------------------------------------------
// Same-screen identification and candidate extraction
// ---------------------------------------------------------------------------

namespace {

struct RegionSplit {
  std::vector<UiElement> dynamic;
  std::vector<UiElement> fixed;
};

RegionSplit split_by_kind(const ScreenState& s) {
  RegionSplit out;
  for (const auto& e : s.elements) (e.is_dynamic() ? out.dynamic : out.fixed).push_back(e);
  return out;
}

std::optional<Displacement> dynamic_displacement(const RegionSplit& prev, const RegionSplit& curr) {
  auto pairs = match_semantic(prev.dynamic, curr.dynamic);
  if (pairs.empty()) return std::nullopt;
  return estimate_global_displacement(pairs, prev.dynamic, curr.dynamic);
}

// True for each curr element that has a positionally consistent twin in prev.
std::vector<bool> matched_mask(const RegionSplit& prev, const ScreenState& curr,
                               Displacement global, const MatchConfig& cfg) {
  std::vector<bool> mask(curr.elements.size(), false);
  for (std::size_t k = 0; k < curr.elements.size(); ++k) {
    const auto& c = curr.elements[k];
    for (const auto& p : prev.dynamic) {
      if (p.content == c.content && match_dynamic(p, c, global, cfg)) {
        mask[k] = true;
        break;
      }
    }
    if (mask[k]) continue;
    for (const auto& p : prev.fixed) {
      if (p.content == c.content && match_static(p, c, cfg)) {
        mask[k] = true;
        break;
      }
    }
  }
  return mask;
}

}  // namespace

SameScreenReport same_screen(const ScreenState& prev, const ScreenState& curr,
                             const MatchConfig& cfg) {
  SameScreenReport report;
  const auto p = split_by_kind(prev);
  const auto c = split_by_kind(curr);
  report.prev_dynamic = p.dynamic.size();

  auto dyn_pairs = match_semantic(p.dynamic, c.dynamic);
  if (!dyn_pairs.empty()) {
    report.global = estimate_global_displacement(dyn_pairs, p.dynamic, c.dynamic);
    for (const auto& pr : dyn_pairs) {
      if (match_dynamic(p.dynamic[pr.prev], c.dynamic[pr.curr], *report.global, cfg)) {
        ++report.dynamic_matches;
      }
    }
  }
  if (!p.dynamic.empty()) {
    report.ratio = static_cast<double>(report.dynamic_matches) / static_cast<double>(p.dynamic.size());
  }
  auto mask = matched_mask(p, curr, report.global.value_or(Displacement{}), cfg);
  report.matched_elements = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));

  if (curr.elements.size() < static_cast<std::size_t>(cfg.sparse_screen_count)) {
    report.verdict = ScreenVerdict::BypassSparse;
  } else if (report.matched_elements > static_cast<std::size_t>(cfg.large_modal_match_count)) {
    report.verdict = ScreenVerdict::Same;
  } else if (p.dynamic.empty()) {
    report.verdict = ScreenVerdict::Different;
    report.warnings.push_back("previous screen has no dynamic-region elements; treating as transition");
  } else {
    report.verdict =
        report.ratio > cfg.same_screen_threshold ? ScreenVerdict::Same : ScreenVerdict::Different;
  }
  return report;
}

std::vector<UiElement> extract_candidates(const ScreenState& prev, const ScreenState& curr,
                                          const MatchConfig& cfg) {
  const auto p = split_by_kind(prev);
  const auto c = split_by_kind(curr);
  auto global = dynamic_displacement(p, c).value_or(Displacement{});
  auto mask = matched_mask(p, curr, global, cfg);
  std::vector<UiElement> out;
  for (std::size_t k = 0; k < curr.elements.size(); ++k) {
    if (!mask[k]) out.push_back(curr.elements[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Modal validity scoring
// ---------------------------------------------------------------------------

namespace {

bool name_hits(const std::vector<std::string>& tokens, const std::set<std::string>& keywords) {
  for (const auto& t : tokens) {
    if (keywords.count(t)) return true;
  }
  return false;
}

std::set<std::string> lowered(const std::set<std::string>& s) {
  std::set<std::string> out;
  for (const auto& k : s) out.insert(text::to_lower(k));
  return out;
}

}  // namespace

ModalScore score_modal(std::span<const UiElement> candidates, const ModalScoreConfig& cfg) {
  ModalScore score;
  const auto decide = lowered(cfg.decide_keywords);
  const auto func = lowered(cfg.func_keywords);
  bool any_positive_tag = false;

  for (const auto& m : candidates) {
    ElementModalScore s;
    s.id = m.id;
    const auto& tag = m.content.tag;
    if (cfg.interactive_roles.count(tag)) {
      s.tag = cfg.tag_bonus;
    } else if (cfg.decorative_roles.count(tag)) {
      s.tag = cfg.tag_penalty;
    }
    if (cfg.actionable_tags.count(tag)) {
      auto tokens = text::tokenize(m.content.name);
      if (name_hits(tokens, decide)) {
        s.name = cfg.w_decide;
      } else if (name_hits(tokens, func)) {
        s.name = cfg.w_func;
      }
    }
    any_positive_tag = any_positive_tag || s.tag > 0.0;
    score.total += s.tag + s.name;
    score.elements.push_back(s);
  }

  const auto n = candidates.size();
  if (n > 0 && n < static_cast<std::size_t>(cfg.small_count) && !any_positive_tag) {
    score.count_term = cfg.small_penalty;
  } else if (n >= static_cast<std::size_t>(cfg.large_count)) {
    score.count_term = cfg.large_bonus;
  }
  score.total += score.count_term;
  return score;
}

TemporalReport analyze_temporal(const ScreenState& prev, const ScreenState& curr,
                                const MatchConfig& match_cfg, const ModalScoreConfig& score_cfg) {
  TemporalReport r;
  r.screen = same_screen(prev, curr, match_cfg);
  r.candidates = extract_candidates(prev, curr, match_cfg);
  r.score = score_modal(r.candidates, score_cfg);
  r.accepted = r.screen.verdict != ScreenVerdict::Different && !r.candidates.empty() &&
               r.score.total >= score_cfg.t_modal;
  return r;
}

std::optional<ModalPartition> detect_temporal(const ScreenState& prev, const ScreenState& curr,
                                              const MatchConfig& match_cfg,
                                              const ModalScoreConfig& score_cfg,
                                              std::vector<std::string>* diagnostics) {
  auto r = analyze_temporal(prev, curr, match_cfg, score_cfg);
  if (diagnostics) {
    for (auto& w : r.screen.warnings) diagnostics->push_back(w);
    diagnostics->push_back(fmt::format("temporal: {} R={:.2f} candidates={} score={:.2f}",
                                       to_string(r.screen.verdict), r.screen.ratio,
                                       r.candidates.size(), r.score.total));
  }
  if (!r.accepted) return std::nullopt;
  std::vector<int> ids;
  for (const auto& e : r.candidates) ids.push_back(e.id);
  return make_partition(curr, ids, ModalMethod::Temporal);
}

// ---------------------------------------------------------------------------
// Keyword-based detection
// ---------------------------------------------------------------------------

namespace {

bool field_has_keyword(const std::string& lowered_field, const std::string& kw, bool whole_word) {
  if (lowered_field.empty() || kw.empty()) return false;
  return whole_word ? text::contains_word(lowered_field, kw)
                    : lowered_field.find(kw) != std::string::npos;
}

bool has_any_keyword(const UiElement& e, const std::vector<std::string>& keywords,
                     const std::set<std::string>& whole_word) {
  const auto name = text::to_lower(e.content.name);
  const auto body = text::to_lower(e.content.text);
  for (const auto& raw : keywords) {
    const auto kw = text::to_lower(raw);
    const bool ww = whole_word.count(kw) > 0;
    if (field_has_keyword(name, kw, ww) || field_has_keyword(body, kw, ww)) return true;
  }
  return false;
}

bool has_dismiss_control(std::span<const UiElement> elements, const KeywordDetectConfig& cfg) {
  for (const auto& e : elements) {
    const auto label = text::to_lower(e.label());
    for (const auto& raw : cfg.dismiss_keywords) {
      const auto kw = text::to_lower(raw);
      // "×" is a glyph, everything else must be a whole word ("no" in "cookies" is not a no).
      bool hit = kw == "×" ? label.find(kw) != std::string::npos : text::contains_word(label, kw);
      if (hit) return true;
    }
  }
  return false;
}

bool contains_center(const BoundingBox& box, double inflate, CenterPoint c) {
  return c.cx >= box.x - inflate && c.cx <= box.x + box.w + inflate && c.cy >= box.y - inflate &&
         c.cy <= box.y + box.h + inflate;
}

double box_area(const BoundingBox& b) { return static_cast<double>(b.w) * static_cast<double>(b.h); }

}  // namespace

bool is_anchor(const UiElement& e, const KeywordDetectConfig& cfg) {
  return has_any_keyword(e, cfg.content_keywords, cfg.whole_word_keywords) ||
         has_any_keyword(e, cfg.action_keywords, cfg.whole_word_keywords);
}

std::vector<UiElement> extract_anchors(const ScreenState& state, const KeywordDetectConfig& cfg,
                                       std::optional<SearchRegion> search) {
  std::vector<UiElement> anchors;
  for (const auto& e : state.elements) {
    if (search) {
      auto c = e.center();
      double fx = static_cast<double>(c.cx) / state.screen_w;
      double fy = static_cast<double>(c.cy) / state.screen_h;
      if (fx < search->x0 || fx > search->x1 || fy < search->y0 || fy > search->y1) continue;
    }
    if (is_anchor(e, cfg)) anchors.push_back(e);
  }
  return anchors;
}

double cluster_delta(ScreenSize screen, const KeywordDetectConfig& cfg) noexcept {
  return cfg.cluster_delta_fraction * std::min(screen.w, screen.h);
}

std::vector<std::vector<UiElement>> cluster_anchors(std::span<const UiElement> anchors,
                                                    ScreenSize screen,
                                                    const KeywordDetectConfig& cfg) {
  std::vector<CenterPoint> points;
  points.reserve(anchors.size());
  for (const auto& a : anchors) points.push_back(a.center());
  std::vector<std::vector<UiElement>> clusters;
  for (const auto& idx : cluster_by_distance(points, cluster_delta(screen, cfg))) {
    auto& cl = clusters.emplace_back();
    for (auto i : idx) cl.push_back(anchors[i]);
  }
  return clusters;
}

BoundingBox union_box(std::span<const UiElement> elements) noexcept {
  if (elements.empty()) return {};
  int x0 = elements[0].bbox.x;
  int y0 = elements[0].bbox.y;
  int x1 = x0 + elements[0].bbox.w;
  int y1 = y0 + elements[0].bbox.h;
  for (const auto& e : elements.subspan(1)) {
    x0 = std::min(x0, e.bbox.x);
    y0 = std::min(y0, e.bbox.y);
    x1 = std::max(x1, e.bbox.x + e.bbox.w);
    y1 = std::max(y1, e.bbox.y + e.bbox.h);
  }
  return {x0, y0, x1 - x0, y1 - y0};
}

bool edge_rule(std::span<const UiElement> cluster, ScreenSize screen,
               const KeywordDetectConfig& cfg) noexcept {
  if (cluster.empty()) return false;
  const auto box = union_box(cluster);
  const double cy = box.y + box.h / 2.0;
  const bool at_edge = cy > cfg.bottom_edge_fraction * screen.h || cy < cfg.top_edge_fraction * screen.h;
  if (!at_edge || box.w <= 0) return false;
  if (box.h <= 0) return true;
  return static_cast<double>(box.w) / box.h > cfg.aspect_ratio_min;
}

std::vector<UiElement> cluster_region(std::span<const UiElement> cluster, const ScreenState& state,
                                      const KeywordDetectConfig& cfg) {
  const auto box = union_box(cluster);
  const double inflate = cluster_delta(state.size(), cfg) / 2.0;
  const double region_area = (box.w + 2 * inflate) * (box.h + 2 * inflate);
  std::vector<UiElement> out;
  for (const auto& e : state.elements) {
    // Window frames and page documents behind the modal also have their
    // centers in here; anything bigger than the region cannot sit inside it.
    if (box_area(e.bbox) > region_area) continue;
    if (contains_center(box, inflate, e.center())) out.push_back(e);
  }
  return out;
}

ClusterScore score_cluster(std::span<const UiElement> cluster, const ScreenState& state,
                           const KeywordDetectConfig& cfg) {
  ClusterScore s;
  const auto n = std::min<std::size_t>(cluster.size(), static_cast<std::size_t>(cfg.anchor_cap));
  s.anchor_count = cfg.anchor_weight * static_cast<double>(n);

  const auto box = union_box(cluster);
  const double cx = box.x + box.w / 2.0;
  const double cy = box.y + box.h / 2.0;
  const double half_w = state.screen_w / 2.0;
  const double half_h = state.screen_h / 2.0;
  const double d = std::hypot(cx - half_w, cy - half_h);
  const double d_max = std::hypot(half_w, half_h);
  s.centrality = cfg.centrality_max * std::max(0.0, 1.0 - d / d_max);

  const auto region = cluster_region(cluster, state, cfg);
  auto has_tag = [&](const std::set<std::string>& tags) {
    return std::any_of(region.begin(), region.end(),
                       [&](const UiElement& e) { return tags.count(e.content.tag) > 0; });
  };
  if (has_tag(cfg.button_tags)) s.structural += cfg.structural_bonus;
  if (has_tag(cfg.input_tags)) s.structural += cfg.structural_bonus;
  if (has_dismiss_control(region, cfg)) s.structural += cfg.structural_bonus;

  s.total = s.anchor_count + s.centrality + s.structural;
  return s;
}

KeywordReport analyze_keyword(const ScreenState& state, const KeywordDetectConfig& cfg,
                              std::optional<AppId> app) {
  KeywordReport report;
  std::optional<SearchRegion> search;
  if (app) {
    if (auto it = cfg.search_regions.find(std::string(to_string(*app))); it != cfg.search_regions.end()) {
      search = it->second;
    }
  }
  const auto anchors = extract_anchors(state, cfg, search);
  const auto size = state.size();

  double s_max = 0.0;
  for (auto& cl : cluster_anchors(anchors, size, cfg)) {
    ClusterVerdict v;
    v.anchors = std::move(cl);
    v.edge = edge_rule(v.anchors, size, cfg);
    if (!v.edge) {
      v.score = score_cluster(v.anchors, state, cfg);
      s_max = std::max(s_max, v.score->total);
    }
    report.clusters.push_back(std::move(v));
  }

  const double screen_area = static_cast<double>(size.w) * size.h;
  std::set<int> modal;
  for (auto& v : report.clusters) {
    if (v.edge) {
      v.accepted = true;
      v.reason = "edge banner";
    } else if (v.score->total >= cfg.score_threshold && v.score->total >= cfg.relative_floor * s_max) {
      v.accepted = true;
      v.reason = fmt::format("score {:.1f}", v.score->total);
    } else {
      v.reason = fmt::format("score {:.1f} below threshold", v.score->total);
      continue;
    }

    const auto box = union_box(v.anchors);
    const auto region = cluster_region(v.anchors, state, cfg);
    const double area = box_area(box) / screen_area;
    const bool navigation = std::all_of(v.anchors.begin(), v.anchors.end(), [&](const UiElement& e) {
      return e.region_hint && cfg.navigation_regions.count(e.region_hint->region);
    });
    if (v.anchors.size() < static_cast<std::size_t>(cfg.min_anchors)) {
      v.accepted = false;
      v.reason = "rejected: too few anchors";
    } else if (area < cfg.min_area_fraction) {
      v.accepted = false;
      v.reason = "rejected: region too small";
    } else if (area > cfg.max_area_fraction) {
      v.accepted = false;
      v.reason = "rejected: covers most of the screen";
    } else if (navigation) {
      v.accepted = false;
      v.reason = "rejected: navigation or search bar";
    } else if (!has_dismiss_control(region, cfg)) {
      v.accepted = false;
      v.reason = "rejected: no close or cancel control";
    }
    if (v.accepted) {
      for (const auto& e : region) modal.insert(e.id);
    }
  }
  report.modal_ids.assign(modal.begin(), modal.end());
  return report;
}

std::optional<ModalPartition> detect_keyword(const ScreenState& state,
                                             const KeywordDetectConfig& cfg,
                                             std::optional<AppId> app,
                                             std::vector<std::string>* diagnostics) {
  auto report = analyze_keyword(state, cfg, app);
  if (diagnostics) {
    for (const auto& v : report.clusters) {
      diagnostics->push_back(fmt::format("keyword cluster ({} anchors): {}", v.anchors.size(), v.reason));
    }
  }
  if (report.modal_ids.empty()) return std::nullopt;
  return make_partition(state, report.modal_ids, ModalMethod::Keyword);
}

// ---------------------------------------------------------------------------
// f_modal
// ---------------------------------------------------------------------------

ModalDetection detect_modal(const ScreenState* prev, const ScreenState& curr, const Config& cfg,
                            std::optional<AppId> app) {
  ModalDetection out;
  auto& diag = out.diagnostics;

  if (prev) {
    auto report = analyze_temporal(*prev, curr, cfg.match, cfg.modal_score);
    for (auto& w : report.screen.warnings) diag.push_back(w);
    diag.push_back(fmt::format("temporal: {} R={:.2f} candidates={} score={:.2f}",
                               to_string(report.screen.verdict), report.screen.ratio,
                               report.candidates.size(), report.score.total));
    if (report.screen.verdict != ScreenVerdict::Different) {
      if (report.accepted) {
        std::vector<int> ids;
        for (const auto& e : report.candidates) ids.push_back(e.id);
        out.partition = make_partition(curr, ids, ModalMethod::Temporal);
        diag.push_back("modal path: temporal");
      } else {
        out.partition = make_partition(curr, {}, ModalMethod::None);
        diag.push_back("modal path: none");
      }
      return out;
    }
  }

  if (auto p = detect_keyword(curr, cfg.keyword, app, &diag)) {
    out.partition = std::move(*p);
    diag.push_back("modal path: keyword");
  } else {
    out.partition = make_partition(curr, {}, ModalMethod::None);
    diag.push_back("modal path: none");
  }
  return out;
}

}  // namespace a11yc
