#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "segeval/segment.hpp"

namespace segeval {

// Cost model of the aligner. indel_cost is charged whenever a segment is
// consumed on one side only; the default 2.0 is twice the worst finite match
// cost, so matching overlapping same-label segments always wins over deleting
// them. The time resolution is carried along for configuration echo; the
// overlap predicate itself works on raw time-stamps.
struct AlignmentConfig {
  double indel_cost = 2.0;
  TimeResolution resolution{};
};

// Dense (|gt|+1) x (|pred|+1) dynamic-programming grid. Row 0 and column 0
// hold the boundary deletion costs; the bottom-right corner is the distance.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double distance() const { return values_[rows_ * cols_ - 1]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

enum class EventKind {
  correct_match,     // equal non-NL labels, overlapping
  nl_match,          // both no-label, overlapping
  substitution,      // distinct non-NL labels, overlapping (1 FN + 1 FP)
  gt_deletion,       // ground-truth segment unconsumed -> false negative
  pred_deletion,     // predicted segment unconsumed -> false positive
  nl_deletion_gt,    // no-label segment dropped from the ground truth
  nl_deletion_pred,  // no-label segment dropped from the prediction
};

// One back-trace move. Matches and substitutions carry both segment indices;
// deletions carry only the index of the consumed segment.
struct EditEvent {
  EventKind kind;
  std::optional<std::size_t> gt_index;
  std::optional<std::size_t> pred_index;
  double cost = 0.0;
};

// Alignment events in forward time order. Summing the move costs in that
// order reproduces total_distance exactly, with no tolerance.
struct EditScript {
  std::vector<EditEvent> events;
  double total_distance = 0.0;
};

// Local cost of pairing two segments:
//   +infinity        if the intervals are disjoint,
//   +infinity        if exactly one label is no-label (with overlap),
//   indel_cost       if the labels are distinct non-NL (with overlap),
//   1 - overlap/union otherwise; 0 for identical segments, 1.0 for a single
//                    shared point. Two identical zero-length segments cost 0.
double match_cost(const Segment& gt, const Segment& pred, const AlignmentConfig& cfg);

// Fills the full edit-distance grid:
//   d[i][j] = min(d[i-1][j] + c0, d[i][j-1] + c0, d[i-1][j-1] + match_cost).
// Border cells accumulate c0 per consumed segment. Every cell is finite.
CostMatrix compute_cost_matrix(const SegmentSequence& gt, const SegmentSequence& pred,
                               const AlignmentConfig& cfg);

// Reconstructs one optimal path from the filled grid by choosing, at each
// cell, a move whose cost exactly reproduces the cell value. Tie order:
// diagonal, then ground-truth deletion, then prediction deletion. Throws
// InconsistentMatrixError if no move reproduces a cell.
EditScript backtrace(const CostMatrix& d, const SegmentSequence& gt,
                     const SegmentSequence& pred, const AlignmentConfig& cfg);

// Corner value of the cost matrix.
double alignment_distance(const SegmentSequence& gt, const SegmentSequence& pred,
                          const AlignmentConfig& cfg);

}  // namespace segeval
