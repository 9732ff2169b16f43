#include <doctest.h>

#include "a11yc/pipeline.hpp"
#include "support.hpp"

using namespace a11yc;
using namespace testing;

namespace {

bool has_line(const std::vector<std::string>& diag, std::string_view needle) {
  return std::any_of(diag.begin(), diag.end(), [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("compress_documents on the dialog pair puts the modal first") {
  const auto prev = slurp(fixture_path("dialog/prev.tree"));
  const auto curr = slurp(fixture_path("dialog/curr.tree"));
  auto out = compress_documents(prev, curr, CompressOptions{}, Config{});
  CHECK(out.method == ModalMethod::Temporal);
  CHECK(out.document.rfind("[MODAL]\n", 0) == 0);
  CHECK(has_line(out.diagnostics, "app: writer (detected)"));
  CHECK(has_line(out.diagnostics, "modal path: temporal"));
  CHECK(out.observation.source_chars == curr.size());
  CHECK(out.observation.output_chars == render_text(out.observation).size());
}

TEST_CASE("compress honours an explicit app") {
  const auto curr = slurp(fixture_path("corpus/chrome.tree"));
  CompressOptions opts;
  opts.app = AppId::Generic;
  auto out = compress_documents(std::nullopt, curr, opts, Config{});
  CHECK(out.app == AppId::Generic);
  CHECK(has_line(out.diagnostics, "app: generic (given)"));
  CHECK(out.document.find("[REGION: CONTENT]") != std::string::npos);
}

TEST_CASE("compress without a previous screen never takes the temporal path") {
  auto out = compress_documents(std::nullopt, slurp(fixture_path("dialog/curr.tree")), CompressOptions{}, Config{});
  CHECK(out.method != ModalMethod::Temporal);
}

TEST_CASE("mismatched dimensions drop the previous screen") {
  auto prev = slurp(fixture_path("dialog/prev.tree"));
  prev.replace(0, prev.find('\n'), "screen 1280 720");
  auto out = compress_documents(prev, slurp(fixture_path("dialog/curr.tree")), CompressOptions{}, Config{});
  CHECK(out.method != ModalMethod::Temporal);
  CHECK(has_line(out.diagnostics, "ignoring it"));
}

TEST_CASE("parse warnings are reported ahead of the pipeline diagnostics") {
  auto out = compress_documents(std::nullopt, "screen 800 600\nstatic\tHi\t\t\t10\t10\t50\t20\nbroken line\n",
                                CompressOptions{}, Config{});
  REQUIRE_FALSE(out.diagnostics.empty());
  CHECK(out.diagnostics.front() == "input: line 3: expected 8 columns, got 1");
}

TEST_CASE("compress_documents parses both inputs before doing any work") {
  CHECK_THROWS_AS(compress_documents(std::string_view("garbage"), slurp(fixture_path("dialog/curr.tree")),
                                     CompressOptions{}, Config{}),
                  ParseError);
}

TEST_CASE("structured output matches the text output") {
  const auto curr = slurp(fixture_path("corpus/vscode.tree"));
  CompressOptions opts;
  opts.format = OutputFormat::Structured;
  auto structured = compress_documents(std::nullopt, curr, opts, Config{});
  auto text = compress_documents(std::nullopt, curr, CompressOptions{}, Config{});
  auto parsed = parse_structured(structured.document);
  CHECK(parsed == structured.observation);
  CHECK(render_text(parsed) == text.document);
}

TEST_CASE("every output element appears once") {
  for (const auto* name : {"chrome", "chrome_cookie", "calc", "os", "thunderbird"}) {
    auto out = compress_documents(std::nullopt, slurp(fixture_path(std::string("corpus/") + name + ".tree")),
                                  CompressOptions{}, Config{});
    std::multiset<int> ids;
    if (out.observation.modal) {
      for (const auto& e : out.observation.modal->elements) ids.insert(e.id);
    }
    for (const auto& r : out.observation.regions) {
      for (const auto& e : r.elements) ids.insert(e.id);
    }
    std::set<int> unique(ids.begin(), ids.end());
    CHECK_MESSAGE(unique.size() == ids.size(), name);
  }
}

TEST_CASE("the cookie fixture takes the keyword path") {
  auto out = compress_documents(std::nullopt, slurp(fixture_path("corpus/chrome_cookie.tree")), CompressOptions{},
                                Config{});
  CHECK(out.method == ModalMethod::Keyword);
  CHECK(out.document.rfind("[MODAL]\n", 0) == 0);
}

TEST_CASE("Session carries the previous screen") {
  Session s;
  CHECK(s.previous() == nullptr);
  const auto prev = slurp(fixture_path("dialog/prev.tree"));
  const auto curr = slurp(fixture_path("dialog/curr.tree"));
  auto first = s.compress(prev, "");
  CHECK(first.method != ModalMethod::Temporal);
  REQUIRE(s.previous() != nullptr);
  CHECK(s.previous()->elements.size() == parse_tree(prev).state.elements.size());
  auto second = s.compress(curr, "");
  CHECK(second.method == ModalMethod::Temporal);
  CHECK(second.document.rfind("[MODAL]\n", 0) == 0);
  CHECK(second.document == compress_documents(prev, curr, CompressOptions{}, Config{}).document);
}

TEST_CASE("Session leaves its state alone on a parse error") {
  Session s;
  const auto prev = slurp(fixture_path("dialog/prev.tree"));
  s.compress(prev, "");
  const auto before = s.previous()->elements.size();
  CHECK_THROWS_AS(s.compress("not a tree", ""), ParseError);
  REQUIRE(s.previous() != nullptr);
  CHECK(s.previous()->elements.size() == before);
  auto after = s.compress(slurp(fixture_path("dialog/curr.tree")), "");
  CHECK(after.method == ModalMethod::Temporal);
}

TEST_CASE("Session reset forgets the previous screen") {
  Session s;
  s.reset();
  s.reset();
  const auto prev = slurp(fixture_path("dialog/prev.tree"));
  const auto curr = slurp(fixture_path("dialog/curr.tree"));
  s.compress(prev, "");
  s.reset();
  CHECK(s.previous() == nullptr);
  auto out = s.compress(curr, "");
  CHECK(out.method != ModalMethod::Temporal);

  Session same;
  same.compress(curr, "");
  same.reset();
  auto again = same.compress(curr, "");
  CHECK(again.method != ModalMethod::Temporal);
  CHECK_FALSE(has_line(again.diagnostics, "temporal:"));
}

TEST_CASE("Session with a fixed app") {
  Session s(Config{}, AppId::Generic);
  auto out = s.compress(slurp(fixture_path("corpus/writer.tree")), "", OutputFormat::Structured);
  CHECK(out.app == AppId::Generic);
  CHECK_NOTHROW(parse_structured(out.document));
}
