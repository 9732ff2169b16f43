// a11yc: compress accessibility-tree dumps into structured observation text.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "a11yc/config.hpp"
#include "a11yc/modal.hpp"
#include "a11yc/pipeline.hpp"
#include "a11yc/structure.hpp"

namespace fs = std::filesystem;
using namespace a11yc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitConfig = 2;

constexpr const char* kConfigEnv = "A11YC_CONFIG";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Flag beats the environment, which beats the built-in defaults.
Config load_config(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
  }
  return path.empty() ? Config{} : Config::from_file(path);
}

std::optional<AppId> parse_app(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto app = app_from_string(name);
  if (!app) throw ConfigError("unknown app '" + name + "'");
  return app;
}

// Write to a sibling temp file and rename so a failure never leaves half a file.
void write_file(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    out << data;
    if (!out.flush()) throw IoError("cannot write " + path);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot write " + path);
  }
}

std::string quote_label(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

// ---------------------------------------------------------------------------

struct CompressArgs {
  std::string input, prev, app, instruction, format = "text", config, out;
};

int run_compress(const CompressArgs& a) {
  Config cfg;
  CompressOptions opts;
  try {
    cfg = load_config(a.config);
    opts.app = parse_app(a.app);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  opts.instruction = a.instruction;
  opts.format = a.format == "structured" ? OutputFormat::Structured : OutputFormat::Text;

  CompressOutput result;
  try {
    const auto curr = slurp(a.input);
    std::optional<std::string> prev;
    if (!a.prev.empty()) prev = slurp(a.prev);
    result = compress_documents(prev ? std::optional<std::string_view>(*prev) : std::nullopt, curr,
                                opts, cfg);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  }

  for (const auto& d : result.diagnostics) std::cerr << d << '\n';
  try {
    if (a.out.empty()) {
      std::cout << result.document << std::flush;
    } else {
      write_file(a.out, result.document);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  std::string dir, config;
  double target = 0.40;
};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

int run_stats(const StatsArgs& a) {
  Config cfg;
  try {
    cfg = load_config(a.config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  std::error_code ec;
  if (!fs::is_directory(a.dir, ec)) {
    std::cerr << "error: not a directory: " << a.dir << '\n';
    return kExitParse;
  }
  std::vector<fs::path> trees;
  for (const auto& entry : fs::directory_iterator(a.dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && ends_with(name, ".tree") && !ends_with(name, ".prev.tree")) {
      trees.push_back(entry.path());
    }
  }
  std::sort(trees.begin(), trees.end());

  std::string report = fmt::format("{:<28} {:>12} {:>12} {:>8} {:>10}\n", "file", "input_chars",
                                   "output_chars", "ratio", "tokens");
  double ratio_sum = 0.0;
  std::size_t counted = 0;
  for (const auto& tree : trees) {
    const auto stem = tree.filename().string().substr(0, tree.filename().string().size() - 5);
    const auto dir = tree.parent_path();
    try {
      const auto curr = slurp(tree.string());
      std::optional<std::string> prev;
      if (fs::exists(dir / (stem + ".prev.tree"))) prev = slurp((dir / (stem + ".prev.tree")).string());
      CompressOptions opts;
      if (fs::exists(dir / (stem + ".instruction.txt"))) {
        opts.instruction = slurp((dir / (stem + ".instruction.txt")).string());
      }
      auto out = compress_documents(prev ? std::optional<std::string_view>(*prev) : std::nullopt,
                                    curr, opts, cfg);
      const auto& obs = out.observation;
      double ratio = obs.source_chars ? static_cast<double>(obs.output_chars) / obs.source_chars : 0.0;
      ratio_sum += ratio;
      ++counted;
      report += fmt::format("{:<28} {:>12} {:>12} {:>8.4f} {:>10}\n", tree.filename().string(),
                            obs.source_chars, obs.output_chars, ratio, obs.output_token_estimate);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << tree.filename().string() << ": " << e.what() << '\n';
      report += fmt::format("{:<28} SKIPPED ({})\n", tree.filename().string(), e.what());
    }
  }
  if (counted > 0) {
    double mean = ratio_sum / static_cast<double>(counted);
    report += fmt::format("{:<28} {:>12} {:>12} {:>8.4f} {:>10} {} (target <= {:.2f})\n", "mean", "",
                          "", mean, "", mean <= a.target ? "PASS" : "FAIL", a.target);
  }
  std::cout << report << std::flush;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DiffArgs {
  std::string prev, curr, app, config;
};

int run_diff(const DiffArgs& a) {
  Config cfg;
  std::optional<AppId> app;
  try {
    cfg = load_config(a.config);
    app = parse_app(a.app);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  ParseResult prev, curr;
  try {
    prev = parse_tree(slurp(a.prev));
    curr = parse_tree(slurp(a.curr));
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  }

  const AppId chosen = app ? *app : detect_app(curr.state, cfg.profiles);
  const auto& profile = cfg.profiles.get(chosen);
  annotate_regions(prev.state, profile, cfg.keyword);
  annotate_regions(curr.state, profile, cfg.keyword);
  const auto r = analyze_temporal(prev.state, curr.state, cfg.match, cfg.modal_score);

  std::string out = fmt::format("{}, R={:.2f}, ", to_string(r.screen.verdict), r.screen.ratio);
  if (r.screen.global) {
    out += fmt::format("Δp=({},{}), ", r.screen.global->dx, r.screen.global->dy);
  } else {
    out += "Δp=none, ";
  }
  out += fmt::format("{} candidates\n", r.candidates.size());
  out += fmt::format("app: {}\n", to_string(chosen));
  out += fmt::format("dynamic: {} previous, {} matched; matched elements: {}\n", r.screen.prev_dynamic,
                     r.screen.dynamic_matches, r.screen.matched_elements);
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    const auto& e = r.candidates[i];
    const auto& s = r.score.elements[i];
    out += fmt::format("  #{} ({}) {} tag={:+.2f} name={:+.2f}\n", e.id, e.content.tag,
                       quote_label(e.label()), s.tag, s.name);
  }
  out += fmt::format("score: count={:+.2f} total={:.2f} threshold={:.2f} {}\n", r.score.count_term,
                     r.score.total, cfg.modal_score.t_modal, r.accepted ? "modal" : "no modal");
  for (const auto& w : r.screen.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << out << std::flush;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compress accessibility trees into structured observations"};
  app.require_subcommand(1);

  CompressArgs ca;
  auto* compress = app.add_subcommand("compress", "Compress one screen");
  compress->add_option("--input", ca.input, "Screen tree file")->required();
  compress->add_option("--prev", ca.prev, "Previous screen tree file");
  compress->add_option("--app", ca.app, "Application profile (auto-detected when omitted)");
  compress->add_option("--instruction", ca.instruction, "Task instruction text");
  compress->add_option("--format", ca.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  compress->add_option("--config", ca.config, "Configuration file (JSON)");
  compress->add_option("--out", ca.out, "Write output here instead of stdout");

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Compression statistics over a fixture directory");
  stats->add_option("--dir", sa.dir, "Directory of *.tree fixtures")->required();
  stats->add_option("--config", sa.config, "Configuration file (JSON)");
  stats->add_option("--target", sa.target, "Mean ratio to pass");

  DiffArgs da;
  auto* diff = app.add_subcommand("diff", "Explain temporal matching between two screens");
  diff->add_option("--prev", da.prev, "Previous screen tree file")->required();
  diff->add_option("--curr", da.curr, "Current screen tree file")->required();
  diff->add_option("--app", da.app, "Application profile (auto-detected when omitted)");
  diff->add_option("--config", da.config, "Configuration file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  if (*compress) return run_compress(ca);
  if (*stats) return run_stats(sa);
  return run_diff(da);
}
