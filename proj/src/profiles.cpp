#include "a11yc/profiles.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "json_reader.hpp"

namespace a11yc {

using json = nlohmann::json;
using Reader = detail::ObjectReader<ProfileError>;

namespace {

constexpr std::array<std::string_view, 10> kAppNames = {
    "chrome", "vscode", "thunderbird", "gimp", "calc", "impress", "writer", "vlc", "os", "generic"};

}  // namespace

std::string_view to_string(AppId app) noexcept { return kAppNames[static_cast<std::size_t>(app)]; }

std::optional<AppId> app_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kAppNames.size(); ++i) {
    if (kAppNames[i] == name) return static_cast<AppId>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// BandCondition
// ---------------------------------------------------------------------------

BandCondition BandCondition::parse(std::string_view text) {
  static const std::regex re(R"(^\s*([xy])\s*(<=|>=|<|>)\s*([0-9]+(?:\.[0-9]+)?)\s*(px|%)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) {
    throw ProfileError(fmt::format("bad band condition '{}'", text));
  }
  BandCondition c;
  c.axis = m[1] == "x" ? Axis::X : Axis::Y;
  auto op = m[2].str();
  c.op = op == "<" ? Op::Lt : op == "<=" ? Op::Le : op == ">" ? Op::Gt : Op::Ge;
  c.value = std::stod(m[3].str());
  c.unit = m[4] == "px" ? Unit::Px : Unit::Percent;
  return c;
}

std::string BandCondition::to_string() const {
  static constexpr const char* ops[] = {"<", "<=", ">", ">="};
  return fmt::format("{} {} {}{}", axis == Axis::X ? "x" : "y", ops[static_cast<int>(op)], value,
                     unit == Unit::Px ? "px" : "%");
}

double BandCondition::threshold(ScreenSize screen) const noexcept {
  if (unit == Unit::Px) return value;
  return value / 100.0 * (axis == Axis::X ? screen.w : screen.h);
}

bool BandCondition::holds(CenterPoint p, ScreenSize screen) const noexcept {
  const double v = axis == Axis::X ? p.cx : p.cy;
  const double t = threshold(screen);
  switch (op) {
    case Op::Lt: return v < t;
    case Op::Le: return v <= t;
    case Op::Gt: return v > t;
    case Op::Ge: return v >= t;
  }
  return false;
}

bool RegionRule::in_band(CenterPoint p, ScreenSize screen) const noexcept {
  for (const auto& c : band) {
    if (!c.holds(p, screen)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON schema
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> lower_all(std::vector<std::string> v) {
  for (auto& s : v) {
    for (auto& c : s) {
      if (static_cast<unsigned char>(c) < 0x80) c = static_cast<char>(std::tolower(c));
    }
  }
  return v;
}

RegionRule parse_rule(const json& j, const std::string& path) {
  Reader r(j, path);
  RegionRule rule;
  if (!r.get("region", rule.region) || rule.region.empty()) {
    throw ProfileError(path + ": rule needs a region name");
  }
  std::string kind = "dynamic";
  r.get("kind", kind);
  if (kind == "static") {
    rule.kind = RegionKind::Static;
  } else if (kind != "dynamic") {
    throw ProfileError(path + ": kind must be static or dynamic");
  }
  std::vector<std::string> when;
  r.get("when", when);
  for (const auto& w : when) rule.band.push_back(BandCondition::parse(w));
  r.get("anchors", rule.anchors);
  rule.anchors = lower_all(std::move(rule.anchors));
  r.get("anchor_row_px", rule.anchor_row_px);
  r.get("tags", rule.tags);
  rule.tags = lower_all(std::move(rule.tags));
  r.get("detect_windows", rule.detect_windows);
  r.finish();
  return rule;
}

std::vector<RegionRule> parse_rules(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ProfileError(path + ": rules must be a non-empty array");
  std::vector<RegionRule> rules;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rules.push_back(parse_rule(j[i], fmt::format("{}[{}]", path, i)));
  }
  if (!rules.back().is_catch_all()) {
    throw ProfileError(path + ": last rule must be an unconditional catch-all");
  }
  return rules;
}

}  // namespace

RegionProfile parse_profile(AppId app, const json& j) {
  const std::string path = fmt::format("profiles.{}", to_string(app));
  Reader r(j, path);
  RegionProfile p;
  p.app = app;

  if (const json* detect = r.child("detect")) {
    Reader d(*detect, path + ".detect");
    d.get("anchors", p.detect_anchors);
    p.detect_anchors = lower_all(std::move(p.detect_anchors));
    if (const json* pats = d.child("patterns")) {
      for (std::size_t i = 0; i < pats->size(); ++i) {
        Reader pr((*pats)[i], fmt::format("{}.detect.patterns[{}]", path, i));
        AnchorPattern ap;
        if (!pr.get("regex", ap.source)) throw ProfileError(pr.path() + ": regex required");
        pr.get("min_count", ap.min_count);
        pr.get("weight", ap.weight);
        pr.finish();
        try {
          ap.regex = std::regex(ap.source);
        } catch (const std::regex_error&) {
          throw ProfileError(pr.path() + ": invalid regex");
        }
        p.detect_patterns.push_back(std::move(ap));
      }
    }
    d.finish();
  }

  const json* rules = r.child("rules");
  if (!rules) throw ProfileError(path + ": rules required");
  p.rules = parse_rules(*rules, path + ".rules");

  if (const json* views = r.child("views")) {
    for (std::size_t i = 0; i < views->size(); ++i) {
      const std::string vpath = fmt::format("{}.views[{}]", path, i);
      Reader vr((*views)[i], vpath);
      ProfileView v;
      vr.get("name", v.name);
      vr.get("trigger_anchors", v.trigger_anchors);
      v.trigger_anchors = lower_all(std::move(v.trigger_anchors));
      vr.get("min_trigger", v.min_trigger);
      vr.get("exclude_anchors", v.exclude_anchors);
      v.exclude_anchors = lower_all(std::move(v.exclude_anchors));
      const json* vrules = vr.child("rules");
      if (!vrules) throw ProfileError(vpath + ": rules required");
      v.rules = parse_rules(*vrules, vpath + ".rules");
      vr.finish();
      p.views.push_back(std::move(v));
    }
  }
  r.finish();
  return p;
}

ProfileSet ProfileSet::from_json(const json& doc) {
  ProfileSet set;
  set.override_with(doc);
  for (AppId app : kAllApps) {
    if (!set.profiles_.count(app)) {
      throw ProfileError(fmt::format("profile set lacks '{}'", to_string(app)));
    }
  }
  return set;
}

void ProfileSet::override_with(const json& doc) {
  if (!doc.is_object()) throw ProfileError("profiles: expected an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    auto app = app_from_string(it.key());
    if (!app) throw ProfileError(fmt::format("unknown profile '{}'", it.key()));
    profiles_[*app] = parse_profile(*app, it.value());
  }
}

const RegionProfile& ProfileSet::get(AppId app) const {
  auto it = profiles_.find(app);
  if (it == profiles_.end()) throw ProfileError(fmt::format("no profile for '{}'", to_string(app)));
  return it->second;
}

const ProfileSet& ProfileSet::builtin() {
  static const ProfileSet set = from_json(json::parse(kBuiltinProfilesJson));
  return set;
}

}  // namespace a11yc
