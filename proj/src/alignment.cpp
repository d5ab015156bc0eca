#include "segeval/alignment.hpp"

#include <algorithm>
#include <limits>

namespace segeval {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void check_config(const AlignmentConfig& cfg) {
  if (!(cfg.indel_cost > 0.0)) {
    throw Error("alignment config: indel cost must be > 0");
  }
}

}  // namespace

double match_cost(const Segment& gt, const Segment& pred, const AlignmentConfig& cfg) {
  const Time overlap = overlap_length(gt, pred);
  if (overlap < 0.0) return kInfinity;  // disjoint
  if (gt.label.is_no_label() != pred.label.is_no_label()) return kInfinity;
  if (!(gt.label == pred.label)) return cfg.indel_cost;  // substitution
  const Time hull = union_length(gt, pred);
  if (hull <= 0.0) return 0.0;  // two identical zero-length segments
  return 1.0 - overlap / hull;
}

CostMatrix compute_cost_matrix(const SegmentSequence& gt, const SegmentSequence& pred,
                               const AlignmentConfig& cfg) {
  check_config(cfg);
  const std::size_t m = gt.size();
  const std::size_t n = pred.size();
  CostMatrix d(m + 1, n + 1);

  // Borders accumulate move by move so that every cell equals its
  // predecessor plus one move cost, bit for bit.
  d.at(0, 0) = 0.0;
  for (std::size_t i = 1; i <= m; ++i) d.at(i, 0) = d.at(i - 1, 0) + cfg.indel_cost;
  for (std::size_t j = 1; j <= n; ++j) d.at(0, j) = d.at(0, j - 1) + cfg.indel_cost;

  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const double del_gt = d.at(i - 1, j) + cfg.indel_cost;
      const double del_pred = d.at(i, j - 1) + cfg.indel_cost;
      const double diag = d.at(i - 1, j - 1) + match_cost(gt[i - 1], pred[j - 1], cfg);
      d.at(i, j) = std::min({del_gt, del_pred, diag});
    }
  }
  return d;
}

namespace {

EventKind diagonal_kind(const Segment& gt, const Segment& pred) {
  if (gt.label == pred.label) {
    return gt.label.is_no_label() ? EventKind::nl_match : EventKind::correct_match;
  }
  return EventKind::substitution;
}

EditEvent gt_deletion_event(const SegmentSequence& gt, std::size_t index, double cost) {
  const EventKind kind = gt[index].label.is_no_label() ? EventKind::nl_deletion_gt
                                                       : EventKind::gt_deletion;
  return EditEvent{kind, index, std::nullopt, cost};
}

EditEvent pred_deletion_event(const SegmentSequence& pred, std::size_t index, double cost) {
  const EventKind kind = pred[index].label.is_no_label() ? EventKind::nl_deletion_pred
                                                         : EventKind::pred_deletion;
  return EditEvent{kind, std::nullopt, index, cost};
}

}  // namespace

EditScript backtrace(const CostMatrix& d, const SegmentSequence& gt,
                     const SegmentSequence& pred, const AlignmentConfig& cfg) {
  check_config(cfg);
  const std::size_t m = gt.size();
  const std::size_t n = pred.size();
  if (d.rows() != m + 1 || d.cols() != n + 1) {
    throw InconsistentMatrixError("cost matrix shape does not fit the sequences");
  }

  std::vector<EditEvent> events;
  events.reserve(m + n);
  const double c0 = cfg.indel_cost;

  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 && j > 0) {
    const double cell = d.at(i, j);
    const double cm = match_cost(gt[i - 1], pred[j - 1], cfg);
    // exact reproduction of the cell value; ties resolve diagonal first,
    // then ground-truth deletion, then prediction deletion
    if (cell == d.at(i - 1, j - 1) + cm) {
      events.push_back(
          EditEvent{diagonal_kind(gt[i - 1], pred[j - 1]), i - 1, j - 1, cm});
      --i;
      --j;
    } else if (cell == d.at(i - 1, j) + c0) {
      events.push_back(gt_deletion_event(gt, i - 1, c0));
      --i;
    } else if (cell == d.at(i, j - 1) + c0) {
      events.push_back(pred_deletion_event(pred, j - 1, c0));
      --j;
    } else {
      throw InconsistentMatrixError("no move reproduces cell value during back-trace");
    }
  }
  while (i > 0) {
    if (d.at(i, 0) != d.at(i - 1, 0) + c0) {
      throw InconsistentMatrixError("corrupted boundary column");
    }
    events.push_back(gt_deletion_event(gt, i - 1, c0));
    --i;
  }
  while (j > 0) {
    if (d.at(0, j) != d.at(0, j - 1) + c0) {
      throw InconsistentMatrixError("corrupted boundary row");
    }
    events.push_back(pred_deletion_event(pred, j - 1, c0));
    --j;
  }

  std::reverse(events.begin(), events.end());
  return EditScript{std::move(events), d.distance()};
}

double alignment_distance(const SegmentSequence& gt, const SegmentSequence& pred,
                          const AlignmentConfig& cfg) {
  return compute_cost_matrix(gt, pred, cfg).distance();
}

}  // namespace segeval
