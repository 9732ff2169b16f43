#include <doctest.h>

#include "a11yc/structure.hpp"
#include "support.hpp"

using namespace a11yc;
using namespace testing;

namespace {

CompactElement ce(int id, std::string tag, std::string name, int cx, int cy, std::string text = "") {
  return {id, std::move(tag), std::move(name), std::move(text), {cx, cy}};
}

std::vector<CompactElement> column_at(const std::vector<int>& ys) {
  std::vector<CompactElement> v;
  for (std::size_t i = 0; i < ys.size(); ++i) v.push_back(ce(static_cast<int>(i), "static", "row", 100, ys[i]));
  return v;
}

std::map<int, std::string> region_of(const std::vector<SemanticRegion>& regions) {
  std::map<int, std::string> out;
  for (const auto& r : regions) {
    for (const auto& e : r.elements) out[e.id] = r.name;
  }
  return out;
}

std::string cell_name(int row, int col) {
  std::string letters;
  for (int c = col; c > 0; c = (c - 1) / 26) letters.insert(letters.begin(), static_cast<char>('A' + (c - 1) % 26));
  return letters + std::to_string(row);
}

}  // namespace

TEST_CASE("reorder_elements sorts by row then column") {
  auto v = reorder_elements(std::vector<CompactElement>{ce(0, "a", "", 10, 10), ce(1, "b", "", 5, 10), ce(2, "c", "", 0, 0)});
  CHECK(v[0].id == 2);
  CHECK(v[1].id == 1);
  CHECK(v[2].id == 0);

  auto same = reorder_elements(std::vector<CompactElement>{ce(0, "a", "", 5, 5), ce(1, "b", "", 5, 5)});
  CHECK(same[0].id == 0);
  CHECK(same[1].id == 1);

  auto desc = reorder_elements(column_at({300, 200, 100}));
  CHECK(desc[0].center.cy == 100);
  CHECK(desc[2].center.cy == 300);
}

TEST_CASE("reorder_elements is a stable sort") {
  std::mt19937 rng(41);
  for (int run = 0; run < 100; ++run) {
    std::vector<CompactElement> v;
    int n = uniform(rng, 0, 40);
    for (int i = 0; i < n; ++i) v.push_back(ce(i, "static", "", uniform(rng, 0, 3) * 10, uniform(rng, 0, 3) * 10));
    auto out = reorder_elements(v);
    REQUIRE(out.size() == v.size());
    for (std::size_t i = 1; i < out.size(); ++i) {
      auto a = std::pair(out[i - 1].center.cy, out[i - 1].center.cx);
      auto b = std::pair(out[i].center.cy, out[i].center.cx);
      CHECK(a <= b);
      if (a == b) CHECK(out[i - 1].id < out[i].id);
    }
    CHECK(reorder_elements(out) == out);
  }
}

TEST_CASE("segment_regions worked examples") {
  const auto& set = ProfileSet::builtin();
  KeywordDetectConfig kc;
  const ScreenSize s{1920, 1080};

  std::vector<CompactElement> vs{ce(0, "push-button", "Explorer", 76, 500)};
  CHECK(region_of(segment_regions(vs, s, set.get(AppId::VsCode), kc)).at(0) == "APP_LAUNCHER");

  std::vector<CompactElement> bm{ce(0, "push-button", "Travel", 400, 130)};
  CHECK(region_of(segment_regions(bm, s, set.get(AppId::Chrome), kc)).at(0) == "BOOKMARK_BAR");

  std::vector<CompactElement> body{ce(0, "static", "Hello", 900, 600)};
  CHECK(region_of(segment_regions(body, s, set.get(AppId::Chrome), kc)).at(0) == "PAGE_CONTENT");
  CHECK(region_of(segment_regions(body, s, set.get(AppId::Generic), kc)).at(0) == "CONTENT");
}

TEST_CASE("segment_regions assigns every element exactly once") {
  std::mt19937 rng(43);
  const auto& set = ProfileSet::builtin();
  KeywordDetectConfig kc;
  for (int run = 0; run < 200; ++run) {
    auto state = random_state(rng, 60);
    std::vector<CompactElement> els;
    for (const auto& e : state.elements) els.push_back(compact_view(e));
    const auto app = kAllApps[run % kAllApps.size()];
    auto regions = segment_regions(els, state.size(), set.get(app), kc);
    std::multiset<int> seen;
    for (const auto& r : regions) {
      for (const auto& e : r.elements) seen.insert(e.id);
      std::size_t total = 0;
      for (auto b : r.block_sizes) total += b;
      CHECK(total == r.elements.size());
    }
    std::multiset<int> want;
    for (const auto& e : els) want.insert(e.id);
    CHECK(seen == want);
  }
}

TEST_CASE("OS windows split into numbered regions") {
  const auto& os = ProfileSet::builtin().get(AppId::Os);
  std::vector<CompactElement> els{ce(0, "frame", "Files", 500, 400), ce(1, "push-button", "Close", 540, 400),
                                  ce(2, "frame", "Terminal", 1400, 700), ce(3, "push-button", "Minimize", 1440, 700),
                                  ce(4, "static", "Loose text", 1000, 1000)};
  auto where = region_of(segment_regions(els, {1920, 1080}, os, KeywordDetectConfig{}));
  CHECK(where.at(0) == "WINDOW_1");
  CHECK(where.at(1) == "WINDOW_1");
  CHECK(where.at(2) == "WINDOW_2");
  CHECK(where.at(3) == "WINDOW_2");
  CHECK(where.at(4).rfind("WINDOW", 0) == std::string::npos);
}

TEST_CASE("Thunderbird split follows the widest central gap") {
  std::vector<CompactElement> els;
  for (int i = 0; i < 10; ++i) {
    els.push_back(ce(2 * i, "static", "Subject " + std::to_string(i), 600 + 20 * (i % 3), 200 + 40 * i));
    els.push_back(ce(2 * i + 1, "static", "Body " + std::to_string(i), 1500 + 20 * (i % 3), 200 + 40 * i));
  }
  auto split = estimate_split_x(els, {1920, 1080});
  REQUIRE(split.has_value());
  CHECK(*split > 640);
  CHECK(*split < 1500);
  CHECK_FALSE(estimate_split_x(std::vector<CompactElement>{}, {1920, 1080}).has_value());
}

TEST_CASE("detect_app") {
  const auto& set = ProfileSet::builtin();
  auto chrome = screen_of({at(0, "page-tab", "New Tab", 100, 20), at(1, "push-button", "Reload", 80, 70)});
  CHECK(detect_app(chrome, set) == AppId::Chrome);
  auto bare = screen_of({at(0, "static", "", 100, 100), at(1, "push-button", "", 300, 100)});
  CHECK(detect_app(bare, set) == AppId::Generic);
  CHECK(score_apps(bare, set).size() == kAllApps.size());
}

TEST_CASE("corpus fixtures are detected as their own app") {
  const std::vector<std::pair<std::string, AppId>> cases{
      {"chrome", AppId::Chrome}, {"chrome_cookie", AppId::Chrome}, {"vscode", AppId::VsCode},
      {"thunderbird", AppId::Thunderbird}, {"gimp", AppId::Gimp}, {"calc", AppId::Calc},
      {"impress", AppId::Impress}, {"writer", AppId::Writer}, {"vlc", AppId::Vlc}, {"os", AppId::Os}};
  for (const auto& [name, app] : cases) {
    auto state = parse_tree(slurp(fixture_path("corpus/" + name + ".tree"))).state;
    CHECK_MESSAGE(detect_app(state, ProfileSet::builtin()) == app, name);
  }
}

TEST_CASE("estimate_base_gap") {
  ThetaConfig cfg;
  std::vector<int> ys;
  for (int i = 0; i < 20; ++i) ys.push_back(18 * i);
  CHECK(estimate_base_gap(column_at(ys), cfg) == 40.0);
  ys.clear();
  for (int i = 0; i < 20; ++i) ys.push_back(60 * i);
  CHECK(estimate_base_gap(column_at(ys), cfg) == 60.0);
  ys.clear();
  for (int i = 0; i <= 10; ++i) ys.push_back(50 * i);
  for (int i = 1; i <= 3; ++i) ys.push_back(500 + 500 * i);
  CHECK(estimate_base_gap(column_at(ys), cfg) == 50.0);
  CHECK_THROWS_AS(estimate_base_gap(column_at({5}), cfg), TooFewElements);
}

TEST_CASE("split_blocks") {
  std::set<std::string> none;
  CHECK(split_blocks(column_at({100}), 120, none) == std::vector<std::size_t>{1});
  CHECK(split_blocks(column_at({0, 1200}), 120, none) == std::vector<std::size_t>{1, 1});
  std::vector<int> ys;
  for (int i = 0; i < 30; ++i) ys.push_back(119 * i);
  CHECK(split_blocks(column_at(ys), 120, none) == std::vector<std::size_t>{30});
  CHECK(split_blocks({}, 120, none).empty());

  auto with_heading = column_at({0, 20, 40, 60});
  with_heading[2].tag = "heading";
  CHECK(split_blocks(with_heading, 120, {"heading"}) == std::vector<std::size_t>{2, 2});
  CHECK(heading_tags(DedupConfig{}) == std::set<std::string>{"heading"});
}

TEST_CASE("select_theta escalation") {
  ThetaConfig cfg;
  SUBCASE("fragmented at 3x escalates to 4x") {
    std::vector<int> ys;
    int y = 0;
    for (int b = 0; b < 12; ++b) {
      ys.push_back(y);
      if (b >= 8) ys.push_back(y + 40);
      y += (b >= 8 ? 40 : 0) + 140;
    }
    auto choice = select_theta(column_at(ys), 40.0, cfg, {});
    CHECK(choice.multiplier == 4.0);
    CHECK(choice.theta == 160.0);
    CHECK_FALSE(choice.fallback);
  }
  SUBCASE("few blocks are exempt from the singleton test") {
    auto choice = select_theta(column_at({0, 200, 400, 600, 800, 1000}), 40.0, cfg, {});
    CHECK(choice.multiplier == 3.0);
    CHECK(choice.blocks.size() == 6);
  }
  SUBCASE("every multiplier rejected falls back to the last one") {
    std::vector<int> ys;
    for (int i = 0; i < 60; ++i) ys.push_back(1000 * i);
    auto choice = select_theta(column_at(ys), 40.0, cfg, {});
    CHECK(choice.multiplier == 8.0);
    CHECK(choice.fallback);
  }
}

TEST_CASE("block count never grows with theta") {
  std::mt19937 rng(47);
  for (int run = 0; run < 100; ++run) {
    std::vector<int> ys;
    int y = 0;
    int n = uniform(rng, 1, 50);
    for (int i = 0; i < n; ++i) ys.push_back(y += uniform(rng, 0, 300));
    auto col = column_at(ys);
    std::size_t prev = SIZE_MAX;
    for (double theta = 10; theta <= 400; theta += 30) {
      auto blocks = split_blocks(col, theta, {});
      CHECK(blocks.size() <= prev);
      prev = blocks.size();
    }
  }
}

TEST_CASE("over_segmented limits") {
  ThetaConfig cfg;
  std::vector<std::size_t> fifty(50, 2), fifty_one(51, 2);
  CHECK_FALSE(over_segmented(fifty, cfg));
  CHECK(over_segmented(fifty_one, cfg));
  std::vector<std::size_t> half{1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2};
  CHECK_FALSE(over_segmented(half, cfg));
  half[6] = 1;
  CHECK(over_segmented(half, cfg));
  std::vector<std::size_t> ten(10, 1);
  CHECK_FALSE(over_segmented(ten, cfg));
}

TEST_CASE("parse_cell_name") {
  CHECK(parse_cell_name("A1") == std::pair(1, 1));
  CHECK(parse_cell_name("B12") == std::pair(12, 2));
  CHECK(parse_cell_name("AA3") == std::pair(3, 27));
  CHECK_FALSE(parse_cell_name("a1").has_value());
  CHECK_FALSE(parse_cell_name("Total").has_value());
  CHECK_FALSE(parse_cell_name("ABCD1").has_value());
  CHECK_FALSE(parse_cell_name("A").has_value());
}

TEST_CASE("optimize_spreadsheet") {
  SemanticRegion sheet;
  sheet.name = "SHEET";
  const std::set<std::pair<int, int>> valued{{3, 3}, {5, 4}, {4, 5}, {6, 6}, {3, 7}};
  for (int r = 1; r <= 10; ++r) {
    for (int c = 1; c <= 10; ++c) {
      std::string text = valued.count({r, c}) ? std::to_string(r * c) : "";
      sheet.elements.push_back(ce(static_cast<int>(sheet.elements.size()), "table-cell", cell_name(r, c), 100 * c, 20 * r, text));
    }
  }
  sheet.block_sizes = {sheet.elements.size()};

  // Header candidates: empty cells on the first occupied row or column inside the occupied extent.
  int headers = 0;
  for (int r = 3; r <= 6; ++r) {
    for (int c = 3; c <= 7; ++c) {
      if ((r == 3 || c == 3) && !valued.count({r, c})) ++headers;
    }
  }
  auto out = optimize_spreadsheet(sheet, {});
  CHECK(out.elements.size() >= 5);
  CHECK(out.elements.size() <= 5 + static_cast<std::size_t>(headers));
  std::size_t total = 0;
  for (auto b : out.block_sizes) total += b;
  CHECK(total == out.elements.size());
  CHECK(out.block_sizes.size() == 4);

  SemanticRegion empty;
  empty.name = "SHEET";
  CHECK(optimize_spreadsheet(empty, {}).elements.empty());

  auto blank = sheet;
  for (auto& e : blank.elements) e.text.clear();
  blank.elements.push_back(ce(1000, "table-cell", "Total", 100, 300));
  blank.block_sizes = {blank.elements.size()};
  auto kept = optimize_spreadsheet(blank, {"total"});
  REQUIRE(kept.elements.size() == 1);
  CHECK(kept.elements[0].name == "Total");
}

TEST_CASE("assemble") {
  SemanticRegion a;
  a.name = "CONTENT";
  a.elements = {ce(0, "static", "Hello", 10, 10)};
  a.block_sizes = {1};
  SemanticRegion empty;
  empty.name = "SIDE";

  auto no_modal = assemble(std::nullopt, {a, empty}, 500);
  CHECK_FALSE(no_modal.modal.has_value());
  REQUIRE(no_modal.regions.size() == 1);
  CHECK(no_modal.output_chars == render_text(no_modal).size());
  CHECK(no_modal.output_token_estimate == (no_modal.output_chars + 3) / 4);
  CHECK(no_modal.output_words == count_words(render_text(no_modal)));
  CHECK(no_modal.source_chars == 500);

  SemanticRegion dialog;
  dialog.name = "MODAL";
  for (int i = 0; i < 6; ++i) dialog.elements.push_back(ce(10 + i, "push-button", "b", 5, 5 + 20 * i));
  dialog.block_sizes = {6};
  auto with_modal = assemble(dialog, {a}, 500);
  REQUIRE(with_modal.modal.has_value());
  CHECK(with_modal.modal->elements.size() == 6);
  CHECK(render_text(with_modal).rfind("[MODAL]\n", 0) == 0);

  auto nothing = assemble(std::nullopt, {empty}, 10);
  CHECK(nothing.regions.empty());
  CHECK(render_text(nothing) == "[EMPTY]\n");
}
