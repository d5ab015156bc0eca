#include "segeval/segment.hpp"

#include <algorithm>
#include <sstream>

namespace segeval {

Time overlap_length(const Segment& a, const Segment& b) {
  return std::min(a.end, b.end) - std::max(a.begin, b.begin);
}

Time union_length(const Segment& a, const Segment& b) {
  return std::max(a.end, b.end) - std::min(a.begin, b.begin);
}

bool segments_overlap(const Segment& a, const Segment& b) {
  return overlap_length(a, b) >= 0.0;
}

SegmentSequence validate_sequence(const std::vector<Segment>& raw) {
  std::vector<ValidationIssue> issues;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].begin > raw[i].end) {
      std::ostringstream msg;
      msg << "segment " << i << " has t_begin > t_end (" << raw[i].begin << " > "
          << raw[i].end << ")";
      issues.push_back({ValidationIssue::Kind::invalid_interval, i, i, msg.str()});
    }
  }
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    const bool begins_ok = raw[i].begin <= raw[i + 1].begin;
    const bool ends_ok = raw[i].end <= raw[i + 1].end;
    if (!begins_ok || !ends_ok) {
      std::ostringstream msg;
      msg << "segments (" << i << ", " << i + 1 << ") break the ordering constraint ("
          << (!begins_ok ? "t_begin decreases" : "t_end decreases") << ")";
      issues.push_back({ValidationIssue::Kind::order_violation, i, i + 1, msg.str()});
    }
  }
  if (!issues.empty()) {
    std::ostringstream what;
    what << "invalid segment sequence: " << issues.size() << " violation(s); first: "
         << issues.front().message;
    throw ValidationError(what.str(), std::move(issues));
  }

  Span span{0.0, 0.0};
  if (!raw.empty()) {
    // ordering makes the hull the first begin and the last end
    span = {raw.front().begin, raw.back().end};
  }
  return SegmentSequence(raw, span);
}

namespace {

// Filler over [lo, hi]; when a fractional gap inverts the margins, collapse
// to a zero-length marker at the midpoint, clamped into [floor_lo, ceil_hi].
Segment make_filler(Time lo, Time hi, Time floor_lo, Time ceil_hi) {
  if (hi < lo) {
    Time mid = (lo + hi) / 2.0;
    mid = std::clamp(mid, floor_lo, ceil_hi);
    lo = hi = mid;
  }
  return Segment{Label::no_label(), lo, hi};
}

}  // namespace

SegmentSequence fill_no_label(const SegmentSequence& seq, Span span, TimeResolution res) {
  const Time eps = res.epsilon;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].begin < span.begin || seq[i].end > span.end) {
      std::ostringstream msg;
      msg << "span [" << span.begin << ", " << span.end << "] does not enclose segment "
          << i << " [" << seq[i].begin << ", " << seq[i].end << "]";
      throw SpanError(msg.str());
    }
  }

  std::vector<Segment> filled;
  filled.reserve(seq.size() * 2 + 1);

  if (seq.empty()) {
    if (span.end > span.begin) {
      filled.push_back(Segment{Label::no_label(), span.begin, span.end});
    }
    return SegmentSequence(std::move(filled), span);
  }

  if (seq[0].begin > span.begin) {
    filled.push_back(make_filler(span.begin, seq[0].begin - eps, span.begin, span.end));
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    filled.push_back(seq[i]);
    if (i + 1 < seq.size()) {
      const Time gap_lo = seq[i].end;
      const Time gap_hi = seq[i + 1].begin;
      if (gap_hi - gap_lo > eps) {
        filled.push_back(make_filler(gap_lo + eps, gap_hi - eps, gap_lo, gap_hi));
      }
    }
  }
  if (span.end > seq[seq.size() - 1].end) {
    filled.push_back(
        make_filler(seq[seq.size() - 1].end + eps, span.end, span.begin, span.end));
  }

  return SegmentSequence(std::move(filled), span);
}

Span hull(const SegmentSequence& seq) {
  if (seq.empty()) return Span{0.0, 0.0};
  return Span{seq[0].begin, seq[seq.size() - 1].end};
}

Span merge(const Span& a, const Span& b) {
  return Span{std::min(a.begin, b.begin), std::max(a.end, b.end)};
}

}  // namespace segeval
