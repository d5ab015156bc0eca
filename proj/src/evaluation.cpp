#include "segeval/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace segeval {

ConfusionMatrix::ConfusionMatrix(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  counts_.assign(dimension() * dimension(), 0);
}

std::size_t ConfusionMatrix::index_of(const Label& label) const {
  if (label.is_no_label()) return 0;
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || !(*it == label)) {
    throw UnknownLabelError("label '" + label.text() + "' is not in the label set");
  }
  return static_cast<std::size_t>(it - labels_.begin()) + 1;
}

std::int64_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::row_sum(std::size_t row) const {
  std::int64_t sum = 0;
  for (std::size_t c = 0; c < dimension(); ++c) sum += at(row, c);
  return sum;
}

std::int64_t ConfusionMatrix::col_sum(std::size_t col) const {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < dimension(); ++r) sum += at(r, col);
  return sum;
}

std::vector<Label> collect_labels(const SegmentSequence& gt, const SegmentSequence& pred) {
  std::vector<Label> labels;
  for (const auto* seq : {&gt, &pred}) {
    for (const Segment& s : seq->segments()) {
      if (!s.label.is_no_label()) labels.push_back(s.label);
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

ConfusionMatrix accumulate_confusion(const EditScript& script, const SegmentSequence& gt,
                                     const SegmentSequence& pred,
                                     const std::vector<Label>& labels) {
  ConfusionMatrix cf(labels);
  const Label nl = Label::no_label();
  for (const EditEvent& e : script.events) {
    switch (e.kind) {
      case EventKind::correct_match:
      case EventKind::nl_match:
      case EventKind::substitution: {
        const Label& row = gt[*e.gt_index].label;
        const Label& col = pred[*e.pred_index].label;
        ++cf.at(cf.index_of(row), cf.index_of(col));
        break;
      }
      case EventKind::gt_deletion:
        ++cf.at(cf.index_of(gt[*e.gt_index].label), cf.index_of(nl));
        break;
      case EventKind::pred_deletion:
        ++cf.at(cf.index_of(nl), cf.index_of(pred[*e.pred_index].label));
        break;
      case EventKind::nl_deletion_gt:
      case EventKind::nl_deletion_pred:
        break;  // not recorded
    }
  }
  return cf;
}

Time latency(const Segment& gt, const Segment& pred) {
  const Time gt_mid = (gt.begin + gt.end) / 2.0;
  const Time pred_mid = (pred.begin + pred.end) / 2.0;
  return pred_mid - gt_mid;
}

Time match_duration(const Segment& gt, const Segment& pred) {
  return overlap_length(gt, pred);
}

MatchStats summarize(const EditScript& script, const SegmentSequence& gt,
                     const SegmentSequence& pred) {
  MatchStats stats;
  Time lat_sum = 0.0;
  Time overlap_sum = 0.0;
  Time pred_len_sum = 0.0;

  // gt index -> pred index over non-NL correct matches, and the reverse
  std::unordered_map<std::size_t, std::size_t> matched_gt;
  std::unordered_map<std::size_t, std::size_t> matched_pred;

  for (const EditEvent& e : script.events) {
    if (e.kind != EventKind::correct_match) continue;
    const Segment& g = gt[*e.gt_index];
    const Segment& p = pred[*e.pred_index];
    ++stats.match_count;
    lat_sum += latency(g, p);
    overlap_sum += match_duration(g, p);
    pred_len_sum += p.end - p.begin;
    matched_gt.emplace(*e.gt_index, *e.pred_index);
    matched_pred.emplace(*e.pred_index, *e.gt_index);
  }

  if (stats.match_count > 0) {
    const auto count = static_cast<Time>(stats.match_count);
    stats.mean_latency = lat_sum / count;
    stats.mean_overlap_duration = overlap_sum / count;
    stats.mean_predicted_duration = pred_len_sum / count;
  }

  // A deleted segment counts as a repetition when it overlaps a same-label
  // segment of the other sequence that was matched to a different partner.
  for (const EditEvent& e : script.events) {
    if (e.kind == EventKind::pred_deletion) {
      const Segment& p = pred[*e.pred_index];
      for (const auto& [gt_index, pred_index] : matched_gt) {
        if (gt[gt_index].label == p.label && segments_overlap(gt[gt_index], p)) {
          ++stats.repetition_count_pred;
          break;
        }
      }
    } else if (e.kind == EventKind::gt_deletion) {
      const Segment& g = gt[*e.gt_index];
      for (const auto& [pred_index, gt_index] : matched_pred) {
        if (pred[pred_index].label == g.label && segments_overlap(pred[pred_index], g)) {
          ++stats.repetition_count_gt;
          break;
        }
      }
    }
  }
  return stats;
}

MacroMetrics macro_metrics(const ConfusionMatrix& cf) {
  const std::int64_t total = cf.total();
  if (total == 0) {
    throw EmptyMatrixError("confusion matrix is empty");
  }

  MacroMetrics m;
  double acc_sum = 0.0;
  double prec_sum = 0.0;
  double rec_sum = 0.0;
  std::int64_t prec_defined = 0;
  std::int64_t rec_defined = 0;

  const auto& labels = cf.labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const std::size_t i = k + 1;  // matrix index (0 is no-label)
    LabelMetrics lm;
    lm.label = labels[k];
    lm.tp = cf.at(i, i);
    lm.fn = cf.row_sum(i) - lm.tp;
    lm.fp = cf.col_sum(i) - lm.tp;
    lm.tn = total - lm.tp - lm.fp - lm.fn;
    lm.accuracy = static_cast<double>(lm.tp + lm.tn) / static_cast<double>(total);
    acc_sum += lm.accuracy;
    if (lm.tp + lm.fp > 0) {
      lm.precision = static_cast<double>(lm.tp) / static_cast<double>(lm.tp + lm.fp);
      prec_sum += *lm.precision;
      ++prec_defined;
    }
    if (lm.tp + lm.fn > 0) {
      lm.recall = static_cast<double>(lm.tp) / static_cast<double>(lm.tp + lm.fn);
      rec_sum += *lm.recall;
      ++rec_defined;
    }
    m.per_label.push_back(std::move(lm));
  }

  const auto n_labels = static_cast<std::int64_t>(labels.size());
  m.labels_without_precision = n_labels - prec_defined;
  m.labels_without_recall = n_labels - rec_defined;
  if (n_labels > 0) m.maa = acc_sum / static_cast<double>(n_labels);
  if (prec_defined > 0) m.map = prec_sum / static_cast<double>(prec_defined);
  if (rec_defined > 0) m.mar = rec_sum / static_cast<double>(rec_defined);
  if (m.map && m.mar) {
    const double sum = *m.map + *m.mar;
    m.maf1 = sum > 0.0 ? 2.0 * (*m.map) * (*m.mar) / sum : 0.0;
  }
  return m;
}

}  // namespace segeval
