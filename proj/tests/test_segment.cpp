#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "segeval/segment.hpp"
#include "segeval/synth.hpp"

using namespace segeval;

namespace {

bool same_segments(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].label == b[i].label) || a[i].begin != b[i].begin || a[i].end != b[i].end) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("labels compare by symbol, no-label stays outside the user set") {
  CHECK(Label("A") == Label("A"));
  CHECK_FALSE(Label("A") == Label("B"));
  CHECK(Label::no_label() == Label::no_label());
  CHECK_FALSE(Label("NL") == Label::no_label());  // same text, different value
  CHECK(Label::no_label().is_no_label());
  CHECK_FALSE(Label("NL").is_no_label());
}

TEST_CASE("validate accepts the golden ground truth") {
  const SegmentSequence seq = validate_sequence(fx::golden_gt_segments());
  CHECK(seq.size() == 6);
  CHECK(seq.span().begin == 0.0);
  CHECK(seq.span().end == 254.0);
}

TEST_CASE("validate accepts an empty list") {
  const SegmentSequence seq = validate_sequence({});
  CHECK(seq.empty());
}

TEST_CASE("validate flags a decreasing end as an order violation") {
  const std::vector<Segment> raw = {Segment{Label("A"), 0, 10}, Segment{Label("B"), 5, 8}};
  try {
    validate_sequence(raw);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues.size() == 1);
    CHECK(e.issues[0].kind == ValidationIssue::Kind::order_violation);
    CHECK(e.issues[0].index == 0);
    CHECK(e.issues[0].other_index == 1);
  }
}

TEST_CASE("validate flags an inverted interval") {
  try {
    validate_sequence({Segment{Label("A"), 5, 3}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues.size() == 1);
    CHECK(e.issues[0].kind == ValidationIssue::Kind::invalid_interval);
    CHECK(e.issues[0].index == 0);
  }
}

TEST_CASE("validate reports every violation, not just the first") {
  const std::vector<Segment> raw = {Segment{Label("A"), 5, 3}, Segment{Label("B"), 1, 10}};
  try {
    validate_sequence(raw);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.issues.size() == 2);
  }
}

TEST_CASE("overlap and union lengths") {
  const Segment a{Label("5"), 51, 101};
  const Segment b{Label("5"), 96, 106};
  CHECK(overlap_length(a, b) == 5.0);
  CHECK(union_length(a, b) == 55.0);

  const Segment same{Label("A"), 0, 10};
  CHECK(overlap_length(same, same) == 10.0);
  CHECK(union_length(same, same) == 10.0);

  CHECK(overlap_length(Segment{Label("A"), 0, 10}, Segment{Label("B"), 20, 30}) == -10.0);

  const Segment point{Label("A"), 7, 7};
  CHECK(union_length(point, point) == 0.0);
}

TEST_CASE("fill reproduces the golden no-label row") {
  // golden ground truth without its no-label segment
  std::vector<Segment> raw = fx::golden_gt_segments();
  raw.erase(raw.begin() + 1);
  const SegmentSequence filled =
      fill_no_label(validate_sequence(raw), Span{0, 254}, TimeResolution{1.0});
  CHECK(same_segments(filled.segments(), fx::golden_gt_segments()));
}

TEST_CASE("fill leaves a covering sequence unchanged") {
  const std::vector<Segment> raw = {Segment{Label("A"), 0, 50}, Segment{Label("B"), 50, 100}};
  const SegmentSequence filled =
      fill_no_label(validate_sequence(raw), Span{0, 100}, TimeResolution{1.0});
  CHECK(same_segments(filled.segments(), raw));
}

TEST_CASE("fill wraps an empty sequence in one no-label segment") {
  const SegmentSequence filled =
      fill_no_label(validate_sequence({}), Span{0, 100}, TimeResolution{1.0});
  REQUIRE(filled.size() == 1);
  CHECK(filled[0].label.is_no_label());
  CHECK(filled[0].begin == 0.0);
  CHECK(filled[0].end == 100.0);
}

TEST_CASE("fill adds head and tail fillers") {
  const SegmentSequence filled = fill_no_label(
      validate_sequence({Segment{Label("A"), 10, 20}}), Span{0, 30}, TimeResolution{1.0});
  REQUIRE(filled.size() == 3);
  CHECK(filled[0].label.is_no_label());
  CHECK(filled[0].begin == 0.0);
  CHECK(filled[0].end == 9.0);
  CHECK(filled[2].label.is_no_label());
  CHECK(filled[2].begin == 21.0);
  CHECK(filled[2].end == 30.0);
}

TEST_CASE("segments contiguous within eps get no filler") {
  const std::vector<Segment> raw = {Segment{Label("A"), 0, 45}, Segment{Label("B"), 46, 100}};
  const SegmentSequence filled =
      fill_no_label(validate_sequence(raw), Span{0, 100}, TimeResolution{1.0});
  CHECK(same_segments(filled.segments(), raw));
}

TEST_CASE("eps 0 fills gaps edge to edge") {
  const std::vector<Segment> raw = {Segment{Label("A"), 0, 10}, Segment{Label("B"), 20, 30}};
  const SegmentSequence filled =
      fill_no_label(validate_sequence(raw), Span{0, 30}, TimeResolution{0.0});
  REQUIRE(filled.size() == 3);
  CHECK(filled[1].label.is_no_label());
  CHECK(filled[1].begin == 10.0);
  CHECK(filled[1].end == 20.0);
}

TEST_CASE("fill rejects a span that cuts a segment") {
  CHECK_THROWS_AS(fill_no_label(validate_sequence({Segment{Label("A"), 0, 50}}),
                                Span{10, 100}, TimeResolution{1.0}),
                  SpanError);
}

TEST_CASE("fill output validates, touches neighbours within eps, and is idempotent") {
  std::mt19937_64 rng(7);
  const TimeResolution res{1.0};
  for (int round = 0; round < 200; ++round) {
    const int n = static_cast<int>(rng() % 5);
    const SegmentSequence valid = validate_sequence(random_segments(rng, n, 3));
    Span span = hull(valid);
    span.begin -= static_cast<Time>(rng() % 4);
    span.end += static_cast<Time>(rng() % 4);
    const SegmentSequence filled = fill_no_label(valid, span, res);

    // still a valid sequence
    CHECK_NOTHROW(validate_sequence(filled.segments()));

    // no uncovered gap wider than eps remains
    for (std::size_t i = 0; i + 1 < filled.size(); ++i) {
      CHECK(filled[i + 1].begin - filled[i].end <= res.epsilon);
    }
    if (!filled.empty()) {
      CHECK(filled[0].begin - span.begin <= res.epsilon);
      CHECK(span.end - filled[filled.size() - 1].end <= res.epsilon);
    }

    // applying the filler again changes nothing
    const SegmentSequence twice = fill_no_label(filled, span, res);
    CHECK(same_segments(filled.segments(), twice.segments()));
  }
}

TEST_CASE("overlap and union are symmetric and ordered") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 500; ++round) {
    const Time b1 = static_cast<Time>(rng() % 50);
    const Time e1 = b1 + static_cast<Time>(rng() % 30);
    const Time b2 = static_cast<Time>(rng() % 50);
    const Time e2 = b2 + static_cast<Time>(rng() % 30);
    const Segment a{Label("A"), b1, e1};
    const Segment b{Label("B"), b2, e2};
    CHECK(overlap_length(a, b) == overlap_length(b, a));
    CHECK(union_length(a, b) == union_length(b, a));
    CHECK(overlap_length(a, b) <= union_length(a, b));
  }
}
