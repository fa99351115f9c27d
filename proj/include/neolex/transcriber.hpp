#pragma once

#include <stdexcept>
#include <string>

#include "neolex/phonotactics.hpp"

namespace neolex {

class IneligibleInput : public std::invalid_argument {
 public:
  explicit IneligibleInput(Reason reason)
      : std::invalid_argument("word is not eligible: " +
                              std::string(reason_name(reason))),
        reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Official-orthography spelling of an eligible word, lowercase, one
/// grapheme per mapped segment.
inline std::string transcribe(const ValidationResult& result) {
  if (!result.eligible) throw IneligibleInput(result.reason);
  std::string out;
  for (const MappedSegment& seg : result.segments) out += spelling(seg.grapheme);
  return out;
}

}  // namespace neolex
