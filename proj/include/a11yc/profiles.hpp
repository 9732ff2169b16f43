#pragma once

#include <array>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "a11yc/model.hpp"

namespace a11yc {

enum class AppId { Chrome, VsCode, Thunderbird, Gimp, Calc, Impress, Writer, Vlc, Os, Generic };

// Fixed order; detect_app breaks ties by position in this list.
inline constexpr std::array<AppId, 10> kAllApps = {
    AppId::Chrome, AppId::VsCode, AppId::Thunderbird, AppId::Gimp,  AppId::Calc,
    AppId::Impress, AppId::Writer, AppId::Vlc,        AppId::Os,    AppId::Generic};

std::string_view to_string(AppId app) noexcept;
std::optional<AppId> app_from_string(std::string_view name);

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One comparison such as "y < 150px" or "x <= 5%", evaluated at an element center.
struct BandCondition {
  enum class Axis { X, Y };
  enum class Op { Lt, Le, Gt, Ge };
  enum class Unit { Px, Percent };

  Axis axis = Axis::X;
  Op op = Op::Lt;
  double value = 0;
  Unit unit = Unit::Px;

  static BandCondition parse(std::string_view text);  // throws ProfileError
  std::string to_string() const;

  double threshold(ScreenSize screen) const noexcept;
  bool holds(CenterPoint p, ScreenSize screen) const noexcept;
};

struct RegionRule {
  std::string region;
  RegionKind kind = RegionKind::Dynamic;
  std::vector<BandCondition> band;  // conjunction; empty means anywhere
  // When set, the rule only claims elements on the same row (within
  // anchor_row_px) as an in-band element whose label contains an anchor.
  std::vector<std::string> anchors;
  double anchor_row_px = 20;
  std::vector<std::string> tags;  // when set, element tag must be one of these
  // Splits the rule's elements into one WINDOW_<k> region per distance
  // cluster that holds a close/minimize control.
  bool detect_windows = false;

  bool is_catch_all() const noexcept {
    return band.empty() && anchors.empty() && tags.empty() && !detect_windows;
  }
  bool in_band(CenterPoint p, ScreenSize screen) const noexcept;
};

struct AnchorPattern {
  std::string source;
  std::regex regex;
  int min_count = 1;
  int weight = 1;
};

// Alternative rule list selected when its trigger anchors dominate the screen.
struct ProfileView {
  std::string name;
  std::vector<std::string> trigger_anchors;
  int min_trigger = 1;
  std::vector<std::string> exclude_anchors;
  std::vector<RegionRule> rules;
};

struct RegionProfile {
  AppId app = AppId::Generic;
  std::vector<std::string> detect_anchors;
  std::vector<AnchorPattern> detect_patterns;
  std::vector<RegionRule> rules;
  std::vector<ProfileView> views;
};

class ProfileSet {
 public:
  // Profiles shipped with the library.
  static const ProfileSet& builtin();

  static ProfileSet from_json(const nlohmann::json& doc);

  // Replaces the profiles named in `doc`; other apps keep their current rules.
  void override_with(const nlohmann::json& doc);

  const RegionProfile& get(AppId app) const;

 private:
  std::map<AppId, RegionProfile> profiles_;
};

RegionProfile parse_profile(AppId app, const nlohmann::json& j);

extern const char* const kBuiltinProfilesJson;

}  // namespace a11yc
