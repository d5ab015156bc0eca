#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "segeval/errors.hpp"

namespace segeval {

// Time stamps and durations are real-valued, in whatever unit the data uses.
using Time = double;

// Symbolic segment label. The reserved no-label value marks unlabeled stream
// regions; it is structurally distinct from every user label, including a
// user label whose text happens to be "NL".
class Label {
 public:
  Label() : no_label_(true) {}
  explicit Label(std::string value) : text_(std::move(value)), no_label_(false) {}

  static Label no_label() { return Label(); }

  bool is_no_label() const { return no_label_; }

  // Display text; the no-label value renders as "NL".
  const std::string& text() const {
    static const std::string nl_text = "NL";
    return no_label_ ? nl_text : text_;
  }

  friend bool operator==(const Label& a, const Label& b) {
    return a.no_label_ == b.no_label_ && (a.no_label_ || a.text_ == b.text_);
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    // no-label sorts before every user label
    if (a.no_label_ != b.no_label_) return a.no_label_ ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (a.no_label_) return std::strong_ordering::equal;
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
  bool no_label_;
};

// One labeled time interval.
struct Segment {
  Label label;
  Time begin = 0.0;
  Time end = 0.0;
};

struct Span {
  Time begin = 0.0;
  Time end = 0.0;
};

// Granularity of the time axis, used only when filling gaps with no-label
// segments: 1.0 reproduces the integer-sample convention (a gap between a
// segment ending at 45 and one starting at 51 becomes NL over [46, 50]);
// 0.0 is the continuous limit ([45, 51]).
struct TimeResolution {
  Time epsilon = 1.0;
};

// Signed overlap min(end_a, end_b) - max(begin_a, begin_b). Negative means
// disjoint; zero means a single shared point, which still counts as overlap.
Time overlap_length(const Segment& a, const Segment& b);

// Length of the hull max(end_a, end_b) - min(begin_a, begin_b).
Time union_length(const Segment& a, const Segment& b);

bool segments_overlap(const Segment& a, const Segment& b);

// An ordered sequence of labeled segments over a stream span: both begin and
// end time-stamps are non-decreasing, so consecutive segments may overlap,
// touch or leave gaps, but never nest or cross. Immutable once built; obtain
// instances through validate_sequence / fill_no_label.
class SegmentSequence {
 public:
  SegmentSequence() = default;

  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  const Span& span() const { return span_; }

 private:
  SegmentSequence(std::vector<Segment> segments, Span span)
      : segments_(std::move(segments)), span_(span) {}

  friend SegmentSequence validate_sequence(const std::vector<Segment>& raw);
  friend SegmentSequence fill_no_label(const SegmentSequence& seq, Span span,
                                       TimeResolution res);

  std::vector<Segment> segments_;
  Span span_{};
};

// Checks every segment interval and the pairwise ordering constraint; throws
// ValidationError listing all violations with their segment indices. The
// resulting span is the hull of the segments.
SegmentSequence validate_sequence(const std::vector<Segment>& raw);

// Inserts no-label segments into every gap wider than epsilon between
// consecutive disjoint segments, and at the head/tail of the span. An
// interior filler runs from prev_end + epsilon to next_begin - epsilon;
// head and tail fillers start/stop at the span edge itself. Throws SpanError
// if the span does not enclose all segments. Idempotent.
SegmentSequence fill_no_label(const SegmentSequence& seq, Span span, TimeResolution res);

// Hull of a sequence (span of first begin to last end); (0, 0) when empty.
Span hull(const SegmentSequence& seq);

// Smallest span enclosing both sequences.
Span merge(const Span& a, const Span& b);

}  // namespace segeval
