#pragma once

// Builders, random generators and brute-force oracles shared by the unit and
// acceptance suites. The oracles deliberately avoid calling the library code
// they check.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "a11yc/config.hpp"
#include "a11yc/model.hpp"
#include "a11yc/profiles.hpp"

namespace testing {

using namespace a11yc;

inline std::string fixture_path(const std::string& rel) { return std::string(A11YC_FIXTURES) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline UiElement make(int id, std::string tag, std::string name, BoundingBox box, std::string text = "") {
  UiElement e;
  e.id = id;
  e.content.tag = std::move(tag);
  e.content.name = std::move(name);
  e.content.text = std::move(text);
  e.bbox = box;
  return e;
}

// 20x10 box whose center is exactly (cx, cy).
inline UiElement at(int id, std::string tag, std::string name, int cx, int cy, std::string text = "") {
  return make(id, std::move(tag), std::move(name), {cx - 10, cy - 5, 20, 10}, std::move(text));
}

inline UiElement hinted(UiElement e, RegionKind kind, std::string region = "R") {
  e.region_hint = RegionHint{std::move(region), kind};
  return e;
}

inline ScreenState screen_of(std::vector<UiElement> elements, int w = 1920, int h = 1080) {
  ScreenState s;
  s.screen_w = w;
  s.screen_h = h;
  for (std::size_t i = 0; i < elements.size(); ++i) elements[i].id = static_cast<int>(i);
  s.elements = std::move(elements);
  return s;
}

// ---------------------------------------------------------------------------
// Random generation
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& tag_pool() {
  static const std::vector<std::string> tags{
      "push-button", "static", "link", "entry", "label", "heading", "image", "paragraph",
      "check-box",   "dialog", "menu", "menu-item", "combo-box", "generic", "table-cell", "text"};
  return tags;
}

inline const std::vector<std::string>& name_pool() {
  static const std::vector<std::string> names{
      "",        "OK",      "Cancel",        "Save",   "Save changes", "File", "File menu",
      "Accept all cookies", "Close", "Privacy policy", "Home",  "Open", "Open file",
      "Settings", "Search", "Reject", "A1",   "Total", "Bookmark", "Look", "Edit"};
  return names;
}

template <class Rng>
int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class Rng>
UiElement random_element(Rng& rng, int id, int w, int h) {
  const auto& tags = tag_pool();
  const auto& names = name_pool();
  BoundingBox box{uniform(rng, -100, w + 50), uniform(rng, -100, h + 50), uniform(rng, 0, 300),
                  uniform(rng, 0, 120)};
  auto e = make(id, tags[uniform(rng, 0, static_cast<int>(tags.size()) - 1)],
                names[uniform(rng, 0, static_cast<int>(names.size()) - 1)], box);
  if (uniform(rng, 0, 4) == 0) e.content.text = names[uniform(rng, 0, static_cast<int>(names.size()) - 1)];
  return e;
}

template <class Rng>
ScreenState random_state(Rng& rng, int max_elements) {
  int w = uniform(rng, 640, 2560);
  int h = uniform(rng, 480, 1440);
  int n = uniform(rng, 0, max_elements);
  std::vector<UiElement> els;
  for (int i = 0; i < n; ++i) els.push_back(random_element(rng, i, w, h));
  return screen_of(std::move(els), w, h);
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

inline std::string oracle_squash(const std::string& s) {
  std::string out;
  for (unsigned char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') continue;
    out.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
  }
  return out;
}

inline std::size_t oracle_cp_len(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

// Label after whitespace collapsing, as the length guard measures it.
inline std::string oracle_collapse(const std::string& s) {
  std::string out;
  bool pending = false;
  for (unsigned char c : s) {
    bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    if (ws) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

inline std::string oracle_label(const UiElement& e) {
  return e.content.name.empty() ? e.content.text : e.content.name;
}

inline bool oracle_duplicate(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  const auto la = oracle_squash(oracle_label(a));
  const auto lb = oracle_squash(oracle_label(b));
  if (la.empty() || lb.empty()) return false;
  const bool related = la == lb || la.find(lb) != std::string::npos || lb.find(la) != std::string::npos;
  if (!related) return false;
  const double na = static_cast<double>(oracle_cp_len(oracle_collapse(oracle_label(a))));
  const double nb = static_cast<double>(oracle_cp_len(oracle_collapse(oracle_label(b))));
  if (std::max(na, nb) > cfg.over_merge_length_ratio * std::min(na, nb)) return false;

  const double ax = a.bbox.x + std::ceil(a.bbox.w / 2.0), ay = a.bbox.y + std::ceil(a.bbox.h / 2.0);
  const double bx = b.bbox.x + std::ceil(b.bbox.w / 2.0), by = b.bbox.y + std::ceil(b.bbox.h / 2.0);
  if (std::sqrt((ax - bx) * (ax - bx) + (ay - by) * (ay - by)) <= cfg.proximity_threshold) return true;
  return la == lb && std::fabs(ay - by) <= cfg.name_match_y_tolerance;
}

// True when `a` survives the pair.
inline bool oracle_keeps_first(const UiElement& a, const UiElement& b, const DedupConfig& cfg) {
  auto tier = [&](const std::string& t) {
    auto it = cfg.priority_table.find(t);
    return it == cfg.priority_table.end() ? cfg.default_priority : it->second;
  };
  if (a.content.tag == "link" && b.content.tag == "static") return true;
  if (b.content.tag == "link" && a.content.tag == "static") return false;
  if (tier(a.content.tag) != tier(b.content.tag)) return tier(a.content.tag) < tier(b.content.tag);
  auto na = oracle_cp_len(oracle_collapse(oracle_label(a)));
  auto nb = oracle_cp_len(oracle_collapse(oracle_label(b)));
  if (na != nb) return na > nb;
  return a.id < b.id;
}

// Repeatedly resolve the lexicographically first live duplicate pair until
// none is left.
inline std::vector<int> dedup_oracle(const std::vector<UiElement>& els, const DedupConfig& cfg) {
  std::vector<bool> live(els.size(), true);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < els.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < els.size() && !changed; ++j) {
        if (!live[i] || !live[j] || !oracle_duplicate(els[i], els[j], cfg)) continue;
        live[oracle_keeps_first(els[i], els[j], cfg) ? j : i] = false;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<int> ids;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (live[i]) ids.push_back(els[i].id);
  }
  return ids;
}

// Breadth-first components of the "closer than delta" graph, as sorted index sets.
inline std::set<std::vector<std::size_t>> components_oracle(const std::vector<CenterPoint>& pts,
                                                            double delta) {
  const std::size_t n = pts.size();
  std::vector<int> comp(n, -1);
  std::set<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = static_cast<int>(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      members.push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        double dx = pts[u].cx - pts[v].cx, dy = pts[u].cy - pts[v].cy;
        if (std::sqrt(dx * dx + dy * dy) < delta) {
          comp[v] = static_cast<int>(s);
          q.push(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.insert(members);
  }
  return out;
}

// Band condition evaluated from its raw fields.
inline bool oracle_condition(const BandCondition& c, CenterPoint p, ScreenSize s) {
  const double v = c.axis == BandCondition::Axis::X ? p.cx : p.cy;
  const double extent = c.axis == BandCondition::Axis::X ? s.w : s.h;
  const double t = c.unit == BandCondition::Unit::Px ? c.value : c.value / 100.0 * extent;
  switch (c.op) {
    case BandCondition::Op::Lt: return v < t;
    case BandCondition::Op::Le: return v <= t;
    case BandCondition::Op::Gt: return v > t;
    case BandCondition::Op::Ge: return v >= t;
  }
  return false;
}

inline bool oracle_band(const RegionRule& r, CenterPoint p, ScreenSize s) {
  return std::all_of(r.band.begin(), r.band.end(),
                     [&](const BandCondition& c) { return oracle_condition(c, p, s); });
}

// Axis-aligned box implied by a rule's band, clipped to the screen.
struct Span {
  double lo, hi;
};

inline std::pair<Span, Span> band_box(const RegionRule& r, ScreenSize s) {
  Span x{0, static_cast<double>(s.w)}, y{0, static_cast<double>(s.h)};
  for (const auto& c : r.band) {
    Span& sp = c.axis == BandCondition::Axis::X ? x : y;
    const double extent = c.axis == BandCondition::Axis::X ? s.w : s.h;
    const double t = c.unit == BandCondition::Unit::Px ? c.value : c.value / 100.0 * extent;
    if (c.op == BandCondition::Op::Lt || c.op == BandCondition::Op::Le) sp.hi = std::min(sp.hi, t);
    if (c.op == BandCondition::Op::Gt || c.op == BandCondition::Op::Ge) sp.lo = std::max(sp.lo, t);
  }
  return {x, y};
}

}  // namespace testing
