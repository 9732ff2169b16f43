#include "a11yc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_reader.hpp"

namespace a11yc {

using json = nlohmann::json;
using Reader = detail::ObjectReader<ConfigError>;

namespace {

void read_match(const json& j, MatchConfig& c) {
  Reader r(j, "match");
  r.get("eps_static", c.eps_static);
  r.get("eps_dynamic", c.eps_dynamic);
  r.get("same_screen_threshold", c.same_screen_threshold);
  r.get("large_modal_match_count", c.large_modal_match_count);
  r.get("sparse_screen_count", c.sparse_screen_count);
  r.finish();
}

void read_modal_score(const json& j, ModalScoreConfig& c) {
  Reader r(j, "modal_score");
  r.get("interactive_roles", c.interactive_roles);
  r.get("decorative_roles", c.decorative_roles);
  r.get("tag_bonus", c.tag_bonus);
  r.get("tag_penalty", c.tag_penalty);
  r.get("w_decide", c.w_decide);
  r.get("w_func", c.w_func);
  r.get("decide_keywords", c.decide_keywords);
  r.get("func_keywords", c.func_keywords);
  r.get("actionable_tags", c.actionable_tags);
  r.get("small_penalty", c.small_penalty);
  r.get("large_bonus", c.large_bonus);
  r.get("small_count", c.small_count);
  r.get("large_count", c.large_count);
  r.get("t_modal", c.t_modal);
  r.finish();
}

void read_keyword(const json& j, KeywordDetectConfig& c) {
  Reader r(j, "keyword");
  r.get("content_keywords", c.content_keywords);
  r.get("action_keywords", c.action_keywords);
  r.get("whole_word_keywords", c.whole_word_keywords);
  r.get("cluster_delta_fraction", c.cluster_delta_fraction);
  r.get("bottom_edge_fraction", c.bottom_edge_fraction);
  r.get("top_edge_fraction", c.top_edge_fraction);
  r.get("aspect_ratio_min", c.aspect_ratio_min);
  r.get("score_threshold", c.score_threshold);
  r.get("relative_floor", c.relative_floor);
  r.get("anchor_cap", c.anchor_cap);
  r.get("anchor_weight", c.anchor_weight);
  r.get("centrality_max", c.centrality_max);
  r.get("structural_bonus", c.structural_bonus);
  r.get("button_tags", c.button_tags);
  r.get("input_tags", c.input_tags);
  r.get("dismiss_keywords", c.dismiss_keywords);
  r.get("min_anchors", c.min_anchors);
  r.get("min_area_fraction", c.min_area_fraction);
  r.get("max_area_fraction", c.max_area_fraction);
  r.get("navigation_regions", c.navigation_regions);
  if (const json* regions = r.child("search_regions")) {
    if (!regions->is_object()) throw ConfigError("keyword.search_regions: expected an object");
    for (auto it = regions->begin(); it != regions->end(); ++it) {
      if (!app_from_string(it.key())) {
        throw ConfigError("keyword.search_regions: unknown app '" + it.key() + "'");
      }
      std::vector<double> box;
      try {
        box = it.value().get<std::vector<double>>();
      } catch (const json::exception&) {
        throw ConfigError("keyword.search_regions." + it.key() + ": expected [x0, y0, x1, y1]");
      }
      if (box.size() != 4) {
        throw ConfigError("keyword.search_regions." + it.key() + ": expected [x0, y0, x1, y1]");
      }
      c.search_regions[it.key()] = {box[0], box[1], box[2], box[3]};
    }
  }
  r.finish();
}

void read_noise(const json& j, NoiseConfig& c) {
  Reader r(j, "noise");
  r.get("os_metadata_tags", c.os_metadata_tags);
  r.finish();
}

void read_dedup(const json& j, DedupConfig& c) {
  Reader r(j, "dedup");
  r.get("proximity_threshold", c.proximity_threshold);
  r.get("name_match_y_tolerance", c.name_match_y_tolerance);
  r.get("over_merge_length_ratio", c.over_merge_length_ratio);
  r.get("priority_table", c.priority_table);
  r.get("default_priority", c.default_priority);
  r.get("link_tag", c.link_tag);
  r.get("static_tag", c.static_tag);
  r.finish();
}

void read_paragraph(const json& j, ParagraphConfig& c) {
  Reader r(j, "paragraph");
  r.get("stop_words", c.stop_words);
  r.get("window_chars", c.window_chars);
  r.get("max_head_chars", c.max_head_chars);
  r.get("min_keyword_len", c.min_keyword_len);
  r.get("paragraph_tags", c.paragraph_tags);
  r.get("value_tags", c.value_tags);
  r.finish();
}

void read_theta(const json& j, ThetaConfig& c) {
  Reader r(j, "theta");
  r.get("floor_px", c.floor_px);
  r.get("quantile", c.quantile);
  r.get("multipliers", c.multipliers);
  r.get("max_blocks", c.max_blocks);
  r.get("frag_block_min", c.frag_block_min);
  r.get("frag_singleton_ratio", c.frag_singleton_ratio);
  r.finish();
}

void require(bool ok, const char* what) {
  if (!ok) throw ConfigError(what);
}

bool open_unit(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

Config Config::from_json(const json& doc) {
  Config cfg;
  Reader r(doc, "config");
  if (const json* j = r.child("match")) read_match(*j, cfg.match);
  if (const json* j = r.child("modal_score")) read_modal_score(*j, cfg.modal_score);
  if (const json* j = r.child("keyword")) read_keyword(*j, cfg.keyword);
  if (const json* j = r.child("noise")) read_noise(*j, cfg.noise);
  if (const json* j = r.child("dedup")) read_dedup(*j, cfg.dedup);
  if (const json* j = r.child("paragraph")) read_paragraph(*j, cfg.paragraph);
  if (const json* j = r.child("theta")) read_theta(*j, cfg.theta);
  if (const json* j = r.child("profiles")) {
    try {
      cfg.profiles.override_with(*j);
    } catch (const ProfileError& e) {
      throw ConfigError(e.what());
    }
  }
  r.finish();
  cfg.validate();
  return cfg;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return from_json(doc);
}

void Config::validate() const {
  require(match.eps_static > 0 && match.eps_dynamic > 0, "match: eps values must be > 0");
  require(open_unit(match.same_screen_threshold), "match: same_screen_threshold must be in (0,1)");

  for (const auto& role : modal_score.interactive_roles) {
    require(!modal_score.decorative_roles.count(role),
            "modal_score: interactive_roles and decorative_roles overlap");
  }
  require(std::isfinite(modal_score.t_modal), "modal_score: t_modal must be finite");

  require(open_unit(keyword.cluster_delta_fraction) && open_unit(keyword.bottom_edge_fraction) &&
              open_unit(keyword.top_edge_fraction) && open_unit(keyword.relative_floor) &&
              open_unit(keyword.min_area_fraction) && open_unit(keyword.max_area_fraction),
          "keyword: fractions must lie in (0,1)");
  require(keyword.aspect_ratio_min > 1.0, "keyword: aspect_ratio_min must be > 1");
  require(keyword.anchor_cap > 0, "keyword: anchor_cap must be > 0");

  require(dedup.proximity_threshold >= 0 && dedup.name_match_y_tolerance >= 0,
          "dedup: thresholds must be >= 0");
  require(dedup.over_merge_length_ratio >= 1.0, "dedup: over_merge_length_ratio must be >= 1");

  require(paragraph.window_chars > 0 && paragraph.max_head_chars > 0,
          "paragraph: window_chars and max_head_chars must be > 0");

  require(!theta.multipliers.empty(), "theta: multipliers must not be empty");
  for (std::size_t i = 1; i < theta.multipliers.size(); ++i) {
    require(theta.multipliers[i] > theta.multipliers[i - 1],
            "theta: multipliers must be strictly increasing");
  }
  require(open_unit(theta.quantile), "theta: quantile must be in (0,1)");
  require(theta.floor_px >= 0, "theta: floor_px must be >= 0");
}

}  // namespace a11yc
