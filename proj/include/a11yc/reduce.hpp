#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a11yc/config.hpp"
#include "a11yc/modal.hpp"
#include "a11yc/model.hpp"

namespace a11yc {

// Drops off-screen elements, contentless zero-area elements and OS metadata roles.
std::vector<UiElement> remove_noise(std::span<const UiElement> elements, ScreenSize screen,
                                    const NoiseConfig& cfg);

int tag_priority(std::string_view tag, const DedupConfig& cfg);

// Collapses whitespace runs (newlines and tabs included) to one space and trims.
std::string normalize_strings(std::string_view s);

// normalize_strings applied to every textual field.
UiElement normalize_element(UiElement e);

bool is_duplicate_pair(const UiElement& a, const UiElement& b, const DedupConfig& cfg);

// True when `a` is the one kept if a and b are duplicates.
bool dedup_prefers(const UiElement& a, const UiElement& b, const DedupConfig& cfg);

// Ascending (i, j) scan over listing order; a removed element takes part in no
// later pair.
std::vector<UiElement> dedup(std::span<const UiElement> elements, const DedupConfig& cfg);

std::set<std::string> extract_keywords(std::string_view instruction, const ParagraphConfig& cfg);

std::string compress_paragraph(std::string_view text, const std::set<std::string>& keywords,
                               const ParagraphConfig& cfg);

// Empty optional when the element has no label and is not interactive.
std::optional<CompactElement> compress_attributes(const UiElement& e, const Config& cfg);

// (M', B') after reduction.
struct ReducedPartition {
  std::vector<CompactElement> modal;
  std::vector<CompactElement> background;
  ModalMethod method = ModalMethod::None;
};

std::vector<CompactElement> reduce_elements(std::span<const UiElement> elements, ScreenSize screen,
                                            const std::set<std::string>& keywords,
                                            const Config& cfg);

ReducedPartition reduce(const ModalPartition& partition, ScreenSize screen,
                        std::string_view instruction, const Config& cfg);

}  // namespace a11yc
