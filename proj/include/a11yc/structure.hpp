#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "a11yc/config.hpp"
#include "a11yc/model.hpp"
#include "a11yc/profiles.hpp"
#include "a11yc/reduce.hpp"

namespace a11yc {

inline CenterPoint center_key(const CompactElement& e) noexcept { return e.center; }
inline CenterPoint center_key(const UiElement& e) noexcept { return e.center(); }

// Stable top-to-bottom, then left-to-right.
template <class T>
std::vector<T> reorder_elements(std::vector<T> elements) {
  std::stable_sort(elements.begin(), elements.end(), [](const T& a, const T& b) {
    auto ca = center_key(a);
    auto cb = center_key(b);
    return std::pair(ca.cy, ca.cx) < std::pair(cb.cy, cb.cx);
  });
  return elements;
}

// ---------------------------------------------------------------------------
// Application detection and region segmentation
// ---------------------------------------------------------------------------

struct AppScore {
  AppId app = AppId::Generic;
  int score = 0;
};

// One entry per profile in kAllApps order.
std::vector<AppScore> score_apps(const ScreenState& state, const ProfileSet& profiles);

AppId detect_app(const ScreenState& state, const ProfileSet& profiles);

// Rule list in effect for these elements: a view's rules when its trigger
// anchors dominate, the profile's own rules otherwise.
const std::vector<RegionRule>& select_rules(const RegionProfile& profile,
                                            std::span<const CompactElement> elements);

// Boundary between the message list and the preview pane, estimated from the
// widest horizontal gap in the central band. Empty when the layout gives no
// clear answer.
std::optional<int> estimate_split_x(std::span<const CompactElement> elements, ScreenSize screen);

// Every element lands in exactly one region. Regions come back in rule order
// (window rules expand in place), each reordered and holding a single block;
// empty regions are kept.
std::vector<SemanticRegion> segment_regions(std::span<const CompactElement> elements,
                                            ScreenSize screen, const RegionProfile& profile,
                                            const KeywordDetectConfig& keyword_cfg);

// Fills region_hint on every element so temporal matching can tell static
// from dynamic areas.
void annotate_regions(ScreenState& state, const RegionProfile& profile,
                      const KeywordDetectConfig& keyword_cfg);

CompactElement compact_view(const UiElement& e);

// ---------------------------------------------------------------------------
// Intra-region structuring
// ---------------------------------------------------------------------------

class TooFewElements : public std::invalid_argument {
 public:
  TooFewElements() : std::invalid_argument("need at least two elements to estimate a gap") {}
};

// Expects reading order. max(median of the smallest quantile share of the
// vertical gaps, floor).
double estimate_base_gap(std::span<const CompactElement> elements, const ThetaConfig& cfg);

// Tags at the heading tier of the priority table; they always open a block.
std::set<std::string> heading_tags(const DedupConfig& cfg);

std::vector<std::size_t> split_blocks(std::span<const CompactElement> elements, double theta,
                                      const std::set<std::string>& boundary_tags);

struct ThetaChoice {
  double theta = 0.0;
  double multiplier = 0.0;
  std::vector<std::size_t> blocks;
  bool fallback = false;  // every multiplier was rejected
};

bool over_segmented(std::span<const std::size_t> blocks, const ThetaConfig& cfg);

ThetaChoice select_theta(std::span<const CompactElement> elements, double base_gap,
                         const ThetaConfig& cfg, const std::set<std::string>& boundary_tags);

// Reorders and splits one region in place.
void structure_region(SemanticRegion& region, const ThetaConfig& cfg,
                      const std::set<std::string>& boundary_tags);

// "B12" -> (row 12, column 2). Column letters are base-26 with A = 1.
std::optional<std::pair<int, int>> parse_cell_name(std::string_view name);

SemanticRegion optimize_spreadsheet(const SemanticRegion& region,
                                    const std::set<std::string>& keywords);

// MODAL first, then non-empty regions in order, with size statistics filled in.
CompressedObservation assemble(std::optional<SemanticRegion> modal,
                               std::vector<SemanticRegion> regions, std::size_t source_chars);

// Segmentation, block structuring, spreadsheet optimization and assembly.
CompressedObservation structure_observation(const ReducedPartition& reduced, ScreenSize screen,
                                            AppId app, const std::set<std::string>& keywords,
                                            std::size_t source_chars, const Config& cfg);

}  // namespace a11yc
