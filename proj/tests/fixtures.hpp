#pragma once

#include <random>
#include <utility>
#include <vector>

#include "segeval/segment.hpp"
#include "segeval/synth.hpp"

// Reference pair used across the suites: a six-segment ground truth and an
// eleven-segment prediction over the span [0, 254], both already no-label
// covered. Golden expectations for distance, back-trace, confusion counts
// and statistics are frozen in the tests that use them.
namespace fx {

inline std::vector<segeval::Segment> golden_gt_segments() {
  using segeval::Label;
  using segeval::Segment;
  return {
      Segment{Label("3"), 0, 45},   Segment{Label::no_label(), 46, 50},
      Segment{Label("5"), 51, 101}, Segment{Label("2"), 102, 152},
      Segment{Label("4"), 153, 203}, Segment{Label("1"), 204, 254},
  };
}

inline std::vector<segeval::Segment> golden_pred_segments() {
  using segeval::Label;
  using segeval::Segment;
  return {
      Segment{Label::no_label(), 0, 30},   Segment{Label::no_label(), 31, 50},
      Segment{Label::no_label(), 51, 88},  Segment{Label("5"), 89, 90},
      Segment{Label::no_label(), 91, 95},  Segment{Label("5"), 96, 106},
      Segment{Label("2"), 107, 152},       Segment{Label::no_label(), 153, 174},
      Segment{Label("2"), 175, 195},       Segment{Label::no_label(), 196, 203},
      Segment{Label("1"), 204, 254},
  };
}

inline segeval::SegmentSequence golden_gt() {
  return segeval::validate_sequence(golden_gt_segments());
}

inline segeval::SegmentSequence golden_pred() {
  return segeval::validate_sequence(golden_pred_segments());
}

// expected distance of the golden pair: 8 deletions/substitutions at c0 = 2
// plus the three finite match costs
inline double golden_distance() {
  return 16.0 + (1.0 - 4.0 / 19.0) + (1.0 - 5.0 / 55.0) + (1.0 - 45.0 / 50.0);
}

// Random no-label-covered pair over a shared span on an integer grid, both
// sides at most max_len segments long.
inline std::pair<segeval::SegmentSequence, segeval::SegmentSequence> random_filled_pair(
    std::mt19937_64& rng, std::size_t max_len, int n_labels) {
  using namespace segeval;
  while (true) {
    const int n1 = static_cast<int>(rng() % 4);
    const int n2 = static_cast<int>(rng() % 4);
    const SegmentSequence v1 = validate_sequence(random_segments(rng, n1, n_labels));
    const SegmentSequence v2 = validate_sequence(random_segments(rng, n2, n_labels));
    const Span span = merge(hull(v1), hull(v2));
    const TimeResolution res{1.0};
    const SegmentSequence f1 = fill_no_label(v1, span, res);
    const SegmentSequence f2 = fill_no_label(v2, span, res);
    if (f1.size() <= max_len && f2.size() <= max_len) return {f1, f2};
  }
}

}  // namespace fx
