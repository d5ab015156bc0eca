#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "segeval/alignment.hpp"
#include "segeval/segment.hpp"

namespace segeval {

// (|L|+1) x (|L|+1) count matrix; row = ground-truth label, column = predicted
// label, row/column 0 = no-label. User labels are kept sorted.
class ConfusionMatrix {
 public:
  ConfusionMatrix() : ConfusionMatrix(std::vector<Label>{}) {}
  explicit ConfusionMatrix(std::vector<Label> labels);

  // 0 for the no-label value, 1..|L| for user labels; throws UnknownLabelError.
  std::size_t index_of(const Label& label) const;

  std::int64_t at(std::size_t row, std::size_t col) const {
    return counts_[row * dimension() + col];
  }
  std::int64_t& at(std::size_t row, std::size_t col) {
    return counts_[row * dimension() + col];
  }
  std::int64_t at(const Label& gt, const Label& pred) const {
    return at(index_of(gt), index_of(pred));
  }

  // user labels, without no-label; matrix order is no-label first, then these
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t dimension() const { return labels_.size() + 1; }

  std::int64_t total() const;
  std::int64_t row_sum(std::size_t row) const;
  std::int64_t col_sum(std::size_t col) const;

 private:
  std::vector<Label> labels_;
  std::vector<std::int64_t> counts_;
};

// Sorted distinct non-NL labels occurring in either sequence.
std::vector<Label> collect_labels(const SegmentSequence& gt, const SegmentSequence& pred);

// Replays an edit script into confusion counts:
//   correct match of label l   -> [l][l]
//   no-label match             -> [NL][NL]
//   substitution of a by b     -> [a][b]   (1 FN for a, 1 FP for b)
//   ground-truth deletion of a -> [a][NL]  (FN)
//   prediction deletion of b   -> [NL][b]  (FP)
// No-label deletions are not recorded.
ConfusionMatrix accumulate_confusion(const EditScript& script, const SegmentSequence& gt,
                                     const SegmentSequence& pred,
                                     const std::vector<Label>& labels);

// Signed mid-point distance mid(pred) - mid(gt); positive when the
// prediction lags the ground truth.
Time latency(const Segment& gt, const Segment& pred);

// Overlap length of a matched pair.
Time match_duration(const Segment& gt, const Segment& pred);

struct MatchStats {
  std::int64_t match_count = 0;  // non-NL correct matches
  // Means over the non-NL correct matches; absent when there are none.
  std::optional<Time> mean_latency;
  std::optional<Time> mean_overlap_duration;
  std::optional<Time> mean_predicted_duration;
  // Deleted segments that overlap a same-label segment of the other sequence
  // which was matched elsewhere (several predicted fragments covering one
  // ground-truth segment, or the reverse).
  std::int64_t repetition_count_pred = 0;
  std::int64_t repetition_count_gt = 0;
};

MatchStats summarize(const EditScript& script, const SegmentSequence& gt,
                     const SegmentSequence& pred);

struct LabelMetrics {
  Label label;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
  double accuracy = 0.0;
  std::optional<double> precision;  // absent when tp + fp == 0
  std::optional<double> recall;     // absent when tp + fn == 0
};

// Per-label ratios averaged uniformly over the user label set; labels whose
// denominator is zero are excluded from the corresponding average and
// counted. The no-label row/column contribute to the counts but no-label
// itself is never averaged.
struct MacroMetrics {
  std::optional<double> maa;
  std::optional<double> map;
  std::optional<double> mar;
  std::optional<double> maf1;
  std::vector<LabelMetrics> per_label;
  std::int64_t labels_without_precision = 0;
  std::int64_t labels_without_recall = 0;
};

// Throws EmptyMatrixError when the matrix total is zero.
MacroMetrics macro_metrics(const ConfusionMatrix& cf);

}  // namespace segeval
