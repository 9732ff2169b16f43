#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("a11yc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string sh_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

// Runs the CLI with `args` (already quoted) and `env` prefixed assignments.
Run cli(const std::string& args, const std::string& env = "env -u A11YC_CONFIG") {
  const auto err_path = scratch_dir() / "stderr.txt";
  const std::string cmd = env + " " + sh_quote(A11YC_CLI) + " " + args + " 2>" + sh_quote(err_path.string());
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path.string());
  return r;
}

std::string fx(const std::string& rel) { return sh_quote(fixture_path(rel)); }

void write(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  out << data;
}

}  // namespace

TEST_CASE("compress writes the document to stdout and diagnostics to stderr") {
  auto r = cli("compress --input " + fx("dialog/curr.tree") + " --prev " + fx("dialog/prev.tree"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("[MODAL]\n", 0) == 0);
  CHECK(r.err.find("app: writer (detected)") != std::string::npos);
  CHECK(r.err.find("modal path: temporal") != std::string::npos);
}

TEST_CASE("compress honours --app and --format structured") {
  auto r = cli("compress --input " + fx("corpus/chrome.tree") + " --app generic --format structured");
  CHECK(r.status == 0);
  CHECK(r.err.find("app: generic (given)") != std::string::npos);
  CHECK_NOTHROW(a11yc::parse_structured(r.out));
}

TEST_CASE("compress --out writes the file and leaves stdout empty") {
  const auto out = scratch_dir() / "out.txt";
  fs::remove(out);
  auto r = cli("compress --input " + fx("corpus/writer.tree") + " --out " + sh_quote(out.string()));
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  auto plain = cli("compress --input " + fx("corpus/writer.tree"));
  CHECK(slurp(out.string()) == plain.out);
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("compress failures exit non-zero with empty stdout") {
  auto missing = cli("compress --input /nonexistent/screen.tree");
  CHECK(missing.status == 1);
  CHECK(missing.out.empty());

  const auto bad = scratch_dir() / "bad.tree";
  write(bad, "not a screen\n");
  auto parse = cli("compress --input " + sh_quote(bad.string()));
  CHECK(parse.status == 1);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("parse error") != std::string::npos);

  auto unknown_app = cli("compress --input " + fx("corpus/writer.tree") + " --app emacs");
  CHECK(unknown_app.status == 2);
  CHECK(unknown_app.out.empty());

  const auto cfg = scratch_dir() / "bad.json";
  write(cfg, R"({"match": {"eps_static": -1}})");
  auto bad_cfg = cli("compress --input " + fx("corpus/writer.tree") + " --config " + sh_quote(cfg.string()));
  CHECK(bad_cfg.status == 2);
  CHECK(bad_cfg.out.empty());

  auto usage = cli("compress");
  CHECK(usage.status == 2);
  CHECK(usage.out.empty());
  CHECK(cli("frobnicate").status == 2);
}

TEST_CASE("configuration comes from the environment unless a flag is given") {
  const auto bad = scratch_dir() / "env_bad.json";
  write(bad, R"({"unknown_key": 1})");
  const auto good = scratch_dir() / "env_good.json";
  write(good, R"({"paragraph": {"max_head_chars": 100}})");
  const std::string input = " --input " + fx("corpus/writer.tree");
  CHECK(cli("compress" + input, "A11YC_CONFIG=" + sh_quote(bad.string())).status == 2);
  CHECK(cli("compress" + input + " --config " + sh_quote(good.string()), "A11YC_CONFIG=" + sh_quote(bad.string()))
            .status == 0);
  CHECK(cli("compress" + input, "A11YC_CONFIG=" + sh_quote(good.string())).status == 0);
}

TEST_CASE("diff on identical files") {
  auto r = cli("diff --prev " + fx("dialog/prev.tree") + " --curr " + fx("dialog/prev.tree"));
  CHECK(r.status == 0);
  CHECK(r.out.rfind("same, R=1.00, Δp=(0,0), 0 candidates\n", 0) == 0);
  CHECK(r.out.find("no modal") != std::string::npos);
}

TEST_CASE("diff on the dialog pair lists the six candidates") {
  auto r = cli("diff --prev " + fx("dialog/prev.tree") + " --curr " + fx("dialog/curr.tree"));
  CHECK(r.status == 0);
  CHECK(r.out.find(", 6 candidates\n") != std::string::npos);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\n  #", pos)) != std::string::npos; ++pos) ++rows;
  CHECK(rows == 6);
  CHECK(r.out.find("(dialog)") != std::string::npos);
  CHECK(r.out.find(" modal\n") != std::string::npos);
}

TEST_CASE("diff on unrelated screens") {
  auto r = cli("diff --prev " + fx("corpus/vscode.tree") + " --curr " + fx("corpus/gimp.tree") + " --app generic");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("different, R=0.", 0) == 0);
  CHECK(r.out.find("no modal") != std::string::npos);
}

TEST_CASE("stats over the bundled corpus") {
  auto r = cli("stats --dir " + fx("corpus"));
  CHECK(r.status == 0);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 12);
  CHECK(lines.front().rfind("file", 0) == 0);
  CHECK(lines.back().rfind("mean", 0) == 0);
  CHECK(lines.back().find("PASS (target <= 0.40)") != std::string::npos);
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) CHECK(lines[i].find(".tree") != std::string::npos);
}

TEST_CASE("stats on an empty directory prints only the header") {
  const auto dir = scratch_dir() / "empty_corpus";
  fs::create_directories(dir);
  auto r = cli("stats --dir " + sh_quote(dir.string()));
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  CHECK(r.out.rfind("file", 0) == 0);
}

TEST_CASE("stats marks unreadable fixtures as skipped") {
  const auto dir = scratch_dir() / "mixed_corpus";
  fs::create_directories(dir);
  write(dir / "a.tree", "screen 800 600\nstatic\tHello there\t\t\t10\t10\t100\t20\n");
  write(dir / "b.tree", "garbage\n");
  auto r = cli("stats --dir " + sh_quote(dir.string()));
  CHECK(r.status == 0);
  CHECK(r.out.find("b.tree") != std::string::npos);
  CHECK(r.out.find("SKIPPED") != std::string::npos);
  CHECK(r.out.find("mean") != std::string::npos);
}
