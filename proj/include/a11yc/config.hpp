#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "a11yc/profiles.hpp"

namespace a11yc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchConfig {
  double eps_static = 25.0;
  double eps_dynamic = 25.0;
  double same_screen_threshold = 0.3;
  int large_modal_match_count = 10;
  int sparse_screen_count = 15;
};

struct ModalScoreConfig {
  std::set<std::string> interactive_roles{"dialog", "alertdialog", "menu", "listbox", "tree"};
  std::set<std::string> decorative_roles{"image", "label", "heading", "paragraph", "generic"};
  double tag_bonus = 2.0;
  double tag_penalty = -0.5;
  double w_decide = 1.0;
  double w_func = 0.5;
  std::set<std::string> decide_keywords{"ok", "cancel", "save", "yes", "no", "login", "agree", "delete"};
  std::set<std::string> func_keywords{"sort", "filter", "settings", "search", "find"};
  // Tags for which the name-based score applies.
  std::set<std::string> actionable_tags{"push-button", "button",    "link",      "menu-item",
                                        "entry",       "input",     "combo-box", "check-box",
                                        "radio-button", "toggle-button"};
  double small_penalty = -3.0;
  double large_bonus = 1.0;
  int small_count = 3;
  int large_count = 6;
  double t_modal = 1.0;
};

struct SearchRegion {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;  // screen fractions
};

struct KeywordDetectConfig {
  std::vector<std::string> content_keywords{"cookie", "cookies", "gdpr", "privacy", "consent"};
  std::vector<std::string> action_keywords{"accept", "agree", "allow",  "reject", "save",   "confirm",
                                           "close",  "×",     "ok",     "policy", "manage", "setting"};
  // Matched as whole words; everything else is a substring match.
  std::set<std::string> whole_word_keywords{"ok"};
  double cluster_delta_fraction = 0.08;
  double bottom_edge_fraction = 0.75;
  double top_edge_fraction = 0.15;
  double aspect_ratio_min = 2.5;
  double score_threshold = 65.0;
  double relative_floor = 0.8;
  int anchor_cap = 20;
  double anchor_weight = 2.0;
  double centrality_max = 30.0;
  double structural_bonus = 10.0;
  std::set<std::string> button_tags{"push-button", "button", "link", "menu-item"};
  std::set<std::string> input_tags{"entry", "input", "combo-box", "check-box", "radio-button",
                                   "toggle-button", "switch", "spin-button"};
  std::vector<std::string> dismiss_keywords{"close", "cancel", "dismiss", "×", "reject", "decline",
                                            "accept", "agree", "ok", "got it", "no thanks", "done"};
  int min_anchors = 2;
  double min_area_fraction = 0.01;
  double max_area_fraction = 0.90;
  std::set<std::string> navigation_regions{"ADDRESS_BAR", "TOOLBAR"};
  // Per-app restriction of where anchors are looked for; whole screen otherwise.
  std::map<std::string, SearchRegion> search_regions;
};

struct NoiseConfig {
  std::set<std::string> os_metadata_tags{"desktop-frame", "unknown", "filler", "redundant-object"};
};

struct DedupConfig {
  double proximity_threshold = 20.0;
  double name_match_y_tolerance = 30.0;
  double over_merge_length_ratio = 2.0;
  std::map<std::string, int> priority_table{
      {"entry", 0},      {"combo-box", 0}, {"check-box", 0}, {"radio-button", 0},
      {"toggle-button", 0}, {"input", 0},  {"push-button", 10}, {"link", 10},
      {"menu-item", 10}, {"button", 10},   {"heading", 20},  {"static", 30},
      {"image", 30},     {"group", 30}};
  int default_priority = 30;
  // Tags forming the "link vs static" override pair.
  std::string link_tag = "link";
  std::string static_tag = "static";
};

struct ParagraphConfig {
  std::set<std::string> stop_words{
      "the",  "a",      "an",     "in",       "on",     "at",      "to",     "for",   "of",
      "with", "by",     "from",   "is",       "are",    "am",      "be",     "this",  "that",
      "it",   "please", "can",    "could",    "would",  "you",     "i",      "my",    "me",
      "need", "want",   "try",    "make",     "let",    "click",   "tap",    "press", "hit",
      "select", "choose", "open", "go",       "browse", "navigate", "find",  "search", "check",
      "uncheck", "button", "link", "tab",     "menu",   "window",  "page",   "website", "site",
      "input", "enter",  "type",  "fill",     "text",   "box",     "field"};
  std::size_t window_chars = 50;
  std::size_t max_head_chars = 100;
  std::size_t min_keyword_len = 2;
  std::set<std::string> paragraph_tags{"paragraph", "text", "document-text"};
  // Tags whose text survives attribute compression next to the name.
  std::set<std::string> value_tags{"entry",     "input",      "combo-box", "spin-button",
                                   "table-cell", "cell",      "paragraph", "text",
                                   "document-text"};
};

struct ThetaConfig {
  double floor_px = 40.0;
  double quantile = 0.70;
  std::vector<double> multipliers{3.0, 4.0, 8.0};
  int max_blocks = 50;
  int frag_block_min = 10;
  double frag_singleton_ratio = 0.5;
};

struct Config {
  MatchConfig match;
  ModalScoreConfig modal_score;
  KeywordDetectConfig keyword;
  NoiseConfig noise;
  DedupConfig dedup;
  ParagraphConfig paragraph;
  ThetaConfig theta;
  ProfileSet profiles = ProfileSet::builtin();

  // Defaults with `doc` layered on top. Unknown keys and violated invariants
  // throw ConfigError.
  static Config from_json(const nlohmann::json& doc);
  static Config from_file(const std::string& path);

  void validate() const;
};

}  // namespace a11yc
