#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a11yc/config.hpp"
#include "a11yc/modal.hpp"
#include "a11yc/model.hpp"
#include "a11yc/profiles.hpp"

namespace a11yc {

struct CompressOptions {
  std::string instruction;
  std::optional<AppId> app;  // detected from the screen when empty
  OutputFormat format = OutputFormat::Text;
};

struct CompressOutput {
  CompressedObservation observation;
  std::string document;  // serialized observation
  std::vector<std::string> diagnostics;
  ModalMethod method = ModalMethod::None;
  AppId app = AppId::Generic;
};

// modal detection -> reduction -> structuring -> serialization.
// `source_chars` is the size of the raw input the state was parsed from.
CompressOutput compress(const ScreenState* prev, const ScreenState& curr, std::size_t source_chars,
                        const CompressOptions& opts, const Config& cfg);

// Parses both documents first; throws ParseError before doing any work.
CompressOutput compress_documents(std::optional<std::string_view> prev_raw, std::string_view curr_raw,
                                  const CompressOptions& opts, const Config& cfg);

// Carries the previous screen between steps so temporal detection has a t-1.
class Session {
 public:
  explicit Session(Config cfg = {}, std::optional<AppId> app = std::nullopt)
      : cfg_(std::move(cfg)), app_(app) {}

  // On ParseError the stored previous screen is left untouched.
  CompressOutput compress(std::string_view raw, std::string_view instruction,
                          OutputFormat format = OutputFormat::Text);
  void reset() noexcept { prev_.reset(); }
  const ScreenState* previous() const noexcept { return prev_ ? &*prev_ : nullptr; }
  const Config& config() const noexcept { return cfg_; }

 private:
  Config cfg_;
  std::optional<AppId> app_;
  std::optional<ScreenState> prev_;
};

}  // namespace a11yc
