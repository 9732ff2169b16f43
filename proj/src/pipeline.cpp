#include "a11yc/pipeline.hpp"

#include <fmt/format.h>

#include "a11yc/reduce.hpp"
#include "a11yc/structure.hpp"

namespace a11yc {

CompressOutput compress(const ScreenState* prev, const ScreenState& curr, std::size_t source_chars,
                        const CompressOptions& opts, const Config& cfg) {
  CompressOutput out;
  auto& diag = out.diagnostics;

  out.app = opts.app ? *opts.app : detect_app(curr, cfg.profiles);
  diag.push_back(fmt::format("app: {} ({})", to_string(out.app), opts.app ? "given" : "detected"));
  const auto& profile = cfg.profiles.get(out.app);

  ScreenState annotated = curr;
  annotate_regions(annotated, profile, cfg.keyword);

  std::optional<ScreenState> prev_annotated;
  if (prev) {
    if (prev->screen_w != curr.screen_w || prev->screen_h != curr.screen_h) {
      diag.push_back(fmt::format("previous screen is {}x{}, current is {}x{}; ignoring it",
                                 prev->screen_w, prev->screen_h, curr.screen_w, curr.screen_h));
    } else {
      prev_annotated = *prev;
      annotate_regions(*prev_annotated, profile, cfg.keyword);
    }
  }

  auto detection =
      detect_modal(prev_annotated ? &*prev_annotated : nullptr, annotated, cfg, out.app);
  for (auto& d : detection.diagnostics) diag.push_back(std::move(d));
  out.method = detection.partition.method;

  auto reduced = reduce(detection.partition, curr.size(), opts.instruction, cfg);
  diag.push_back(fmt::format("reduce: modal {} -> {}, background {} -> {}",
                             detection.partition.modal.size(), reduced.modal.size(),
                             detection.partition.background.size(), reduced.background.size()));

  const auto keywords = extract_keywords(opts.instruction, cfg.paragraph);
  out.observation =
      structure_observation(reduced, curr.size(), out.app, keywords, source_chars, cfg);
  out.document = serialize(out.observation, opts.format);
  return out;
}

namespace {

void note_warnings(std::vector<std::string>& diag, std::string_view which,
                   const std::vector<ParseWarning>& warnings) {
  for (const auto& w : warnings) {
    diag.push_back(fmt::format("{}: line {}: {}", which, w.line_no, w.reason));
  }
}

}  // namespace

CompressOutput compress_documents(std::optional<std::string_view> prev_raw, std::string_view curr_raw,
                                  const CompressOptions& opts, const Config& cfg) {
  auto curr = parse_tree(curr_raw);
  std::optional<ParseResult> prev;
  if (prev_raw) prev = parse_tree(*prev_raw);

  std::vector<std::string> parse_diag;
  if (prev) note_warnings(parse_diag, "prev", prev->warnings);
  note_warnings(parse_diag, "input", curr.warnings);

  auto out = compress(prev ? &prev->state : nullptr, curr.state, curr_raw.size(), opts, cfg);
  out.diagnostics.insert(out.diagnostics.begin(), parse_diag.begin(), parse_diag.end());
  return out;
}

CompressOutput Session::compress(std::string_view raw, std::string_view instruction,
                                 OutputFormat format) {
  auto parsed = parse_tree(raw);
  CompressOptions opts{std::string(instruction), app_, format};
  auto out = a11yc::compress(previous(), parsed.state, raw.size(), opts, cfg_);
  std::vector<std::string> parse_diag;
  note_warnings(parse_diag, "input", parsed.warnings);
  out.diagnostics.insert(out.diagnostics.begin(), parse_diag.begin(), parse_diag.end());
  prev_ = std::move(parsed.state);
  return out;
}

}  // namespace a11yc
