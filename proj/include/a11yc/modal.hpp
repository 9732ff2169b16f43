#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "a11yc/config.hpp"
#include "a11yc/model.hpp"
#include "a11yc/profiles.hpp"

namespace a11yc {

enum class ModalMethod { Temporal, Keyword, None };

std::string_view to_string(ModalMethod m) noexcept;

// (M, B): foreground modal elements and the background they occlude.
struct ModalPartition {
  std::vector<UiElement> modal;
  std::vector<UiElement> background;
  ModalMethod method = ModalMethod::None;
};

// Splits `state` by id membership, preserving listing order in both halves.
ModalPartition make_partition(const ScreenState& state, std::span<const int> modal_ids,
                              ModalMethod method);

// ---------------------------------------------------------------------------
// Temporal-difference detection
// ---------------------------------------------------------------------------

// Indices into the prev/curr spans passed to match_semantic.
struct ElementPair {
  std::size_t prev = 0;
  std::size_t curr = 0;

  bool operator==(const ElementPair&) const = default;
};

struct Position {
  double x = 0;
  double y = 0;
};

inline Position position_of(const UiElement& e) {
  auto c = e.center();
  return {static_cast<double>(c.cx), static_cast<double>(c.cy)};
}

struct Displacement {
  int dx = 0;
  int dy = 0;

  bool operator==(const Displacement&) const = default;
};

class NoPairsError : public std::invalid_argument {
 public:
  NoPairsError() : std::invalid_argument("no matched pairs to estimate a displacement from") {}
};

// Every (prev, curr) pair with field-wise equal semantic content; many-to-many.
std::vector<ElementPair> match_semantic(std::span<const UiElement> prev,
                                        std::span<const UiElement> curr);

bool match_static(Position prev, Position curr, const MatchConfig& cfg) noexcept;
bool match_static(const UiElement& prev, const UiElement& curr, const MatchConfig& cfg) noexcept;

// Componentwise median of per-pair displacements (lower median on even counts).
Displacement estimate_global_displacement(std::span<const Displacement> displacements);
Displacement estimate_global_displacement(std::span<const ElementPair> pairs,
                                          std::span<const UiElement> prev,
                                          std::span<const UiElement> curr);

bool match_dynamic(Position prev, Position curr, Displacement global,
                   const MatchConfig& cfg) noexcept;
bool match_dynamic(const UiElement& prev, const UiElement& curr, Displacement global,
                   const MatchConfig& cfg) noexcept;

enum class ScreenVerdict { Same, Different, BypassSparse };

std::string_view to_string(ScreenVerdict v) noexcept;

struct SameScreenReport {
  ScreenVerdict verdict = ScreenVerdict::Different;
  double ratio = 0.0;  // R^t
  std::size_t prev_dynamic = 0;
  std::size_t dynamic_matches = 0;  // pairs passing the dynamic test
  std::size_t matched_elements = 0;  // distinct curr elements with a passing match
  std::optional<Displacement> global;
  std::vector<std::string> warnings;
};

// Requires region hints on both states (unhinted elements count as dynamic).
SameScreenReport same_screen(const ScreenState& prev, const ScreenState& curr,
                             const MatchConfig& cfg);

// Elements of curr with no positionally consistent twin in prev.
std::vector<UiElement> extract_candidates(const ScreenState& prev, const ScreenState& curr,
                                          const MatchConfig& cfg);

struct ElementModalScore {
  int id = 0;
  double tag = 0.0;
  double name = 0.0;
};

struct ModalScore {
  double total = 0.0;
  double count_term = 0.0;
  std::vector<ElementModalScore> elements;
};

ModalScore score_modal(std::span<const UiElement> candidates, const ModalScoreConfig& cfg);

struct TemporalReport {
  SameScreenReport screen;
  std::vector<UiElement> candidates;
  ModalScore score;
  bool accepted = false;
};

// Runs every stage regardless of the verdict so `diff` can show them all.
TemporalReport analyze_temporal(const ScreenState& prev, const ScreenState& curr,
                                const MatchConfig& match_cfg, const ModalScoreConfig& score_cfg);

std::optional<ModalPartition> detect_temporal(const ScreenState& prev, const ScreenState& curr,
                                              const MatchConfig& match_cfg,
                                              const ModalScoreConfig& score_cfg,
                                              std::vector<std::string>* diagnostics = nullptr);

// ---------------------------------------------------------------------------
// Keyword-based detection
// ---------------------------------------------------------------------------

bool is_anchor(const UiElement& e, const KeywordDetectConfig& cfg);

std::vector<UiElement> extract_anchors(const ScreenState& state, const KeywordDetectConfig& cfg,
                                       std::optional<SearchRegion> search = std::nullopt);

double cluster_delta(ScreenSize screen, const KeywordDetectConfig& cfg) noexcept;

std::vector<std::vector<UiElement>> cluster_anchors(std::span<const UiElement> anchors,
                                                    ScreenSize screen,
                                                    const KeywordDetectConfig& cfg);

BoundingBox union_box(std::span<const UiElement> elements) noexcept;

bool edge_rule(std::span<const UiElement> cluster, ScreenSize screen,
               const KeywordDetectConfig& cfg) noexcept;

// Elements whose centers fall inside the cluster box inflated by delta/2.
std::vector<UiElement> cluster_region(std::span<const UiElement> cluster, const ScreenState& state,
                                      const KeywordDetectConfig& cfg);

struct ClusterScore {
  double anchor_count = 0.0;
  double centrality = 0.0;
  double structural = 0.0;
  double total = 0.0;
};

ClusterScore score_cluster(std::span<const UiElement> cluster, const ScreenState& state,
                           const KeywordDetectConfig& cfg);

struct ClusterVerdict {
  std::vector<UiElement> anchors;
  bool edge = false;
  std::optional<ClusterScore> score;
  bool accepted = false;
  std::string reason;
};

struct KeywordReport {
  std::vector<ClusterVerdict> clusters;
  std::vector<int> modal_ids;
};

KeywordReport analyze_keyword(const ScreenState& state, const KeywordDetectConfig& cfg,
                              std::optional<AppId> app = std::nullopt);

std::optional<ModalPartition> detect_keyword(const ScreenState& state,
                                             const KeywordDetectConfig& cfg,
                                             std::optional<AppId> app = std::nullopt,
                                             std::vector<std::string>* diagnostics = nullptr);

// ---------------------------------------------------------------------------
// f_modal
// ---------------------------------------------------------------------------

struct ModalDetection {
  ModalPartition partition;
  std::vector<std::string> diagnostics;
};

// Temporal path when prev exists and the pair is the same screen (or sparse);
// keyword path on the first step or after a transition.
ModalDetection detect_modal(const ScreenState* prev, const ScreenState& curr, const Config& cfg,
                            std::optional<AppId> app = std::nullopt);

}  // namespace a11yc
