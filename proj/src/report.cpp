#include "segeval/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace segeval {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::correct_match: return "correct_match";
    case EventKind::nl_match: return "nl_match";
    case EventKind::substitution: return "substitution";
    case EventKind::gt_deletion: return "gt_deletion";
    case EventKind::pred_deletion: return "pred_deletion";
    case EventKind::nl_deletion_gt: return "nl_deletion_gt";
    case EventKind::nl_deletion_pred: return "nl_deletion_pred";
  }
  return "unknown";
}

const char* event_kind_display(EventKind kind) {
  switch (kind) {
    case EventKind::correct_match: return "correct match";
    case EventKind::nl_match: return "match NL";
    case EventKind::substitution: return "mismatch (1 FP and 1 FN)";
    case EventKind::gt_deletion: return "delete in GT (FN)";
    case EventKind::pred_deletion: return "delete in PRED (FP)";
    case EventKind::nl_deletion_gt: return "delete NL in GT";
    case EventKind::nl_deletion_pred: return "delete NL in PRED";
  }
  return "unknown";
}

namespace {

EventKind event_kind_from_name(const std::string& name) {
  static const std::map<std::string, EventKind> kinds = {
      {"correct_match", EventKind::correct_match},
      {"nl_match", EventKind::nl_match},
      {"substitution", EventKind::substitution},
      {"gt_deletion", EventKind::gt_deletion},
      {"pred_deletion", EventKind::pred_deletion},
      {"nl_deletion_gt", EventKind::nl_deletion_gt},
      {"nl_deletion_pred", EventKind::nl_deletion_pred},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw Error("unknown event kind '" + name + "' in report");
  return it->second;
}

}  // namespace

EvaluationReport evaluate_pair(const std::vector<Segment>& gt_raw,
                               const std::vector<Segment>& pred_raw,
                               const EvaluationConfig& cfg) {
  SegmentSequence gt = validate_sequence(gt_raw);
  SegmentSequence pred = validate_sequence(pred_raw);

  const Span span = cfg.span ? *cfg.span : merge(hull(gt), hull(pred));
  if (cfg.fill == FillMode::auto_fill) {
    const TimeResolution res{cfg.epsilon};
    gt = fill_no_label(gt, span, res);
    pred = fill_no_label(pred, span, res);
  }

  const AlignmentConfig acfg{cfg.indel_cost, TimeResolution{cfg.epsilon}};
  const CostMatrix d = compute_cost_matrix(gt, pred, acfg);
  const EditScript script = backtrace(d, gt, pred, acfg);
  const std::vector<Label> labels = collect_labels(gt, pred);

  EvaluationReport report;
  report.config = cfg;
  report.span = span;
  report.distance = script.total_distance;
  report.confusion = accumulate_confusion(script, gt, pred, labels);
  report.stats = summarize(script, gt, pred);
  report.metrics =
      report.confusion.total() > 0 ? macro_metrics(report.confusion) : MacroMetrics{};

  report.events.reserve(script.events.size());
  for (const EditEvent& e : script.events) {
    ReportEvent re;
    re.kind = e.kind;
    re.gt_index = e.gt_index;
    re.pred_index = e.pred_index;
    if (e.gt_index) re.gt = gt[*e.gt_index];
    if (e.pred_index) re.pred = pred[*e.pred_index];
    re.cost = e.cost;
    report.events.push_back(std::move(re));
  }
  return report;
}

namespace {

std::string label_text(const Label& label, const std::string& sentinel) {
  return label.is_no_label() ? sentinel : label.text();
}

ordered_json segment_to_json(const Segment& s, const std::string& sentinel) {
  return ordered_json{{"label", label_text(s.label, sentinel)},
                      {"t_begin", s.begin},
                      {"t_end", s.end}};
}

Segment segment_from_json(const ordered_json& j, const std::string& sentinel) {
  const std::string text = j.at("label").get<std::string>();
  const Label label = text == sentinel ? Label::no_label() : Label(text);
  return Segment{label, j.at("t_begin").get<double>(), j.at("t_end").get<double>()};
}

template <typename T>
ordered_json opt_to_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> opt_double_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::optional<std::size_t> opt_index_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

}  // namespace

std::string emit_report_json(const EvaluationReport& report) {
  const std::string& nl = report.config.nl_sentinel;
  ordered_json j;
  j["schema_version"] = 1;

  ordered_json cfg;
  cfg["c0"] = report.config.indel_cost;
  cfg["eps"] = report.config.epsilon;
  if (report.config.span) {
    cfg["span"] = ordered_json::array({report.config.span->begin, report.config.span->end});
  } else {
    cfg["span"] = nullptr;
  }
  cfg["nl"] = nl;
  cfg["fill"] = report.config.fill == FillMode::auto_fill ? "auto" : "off";
  j["config"] = std::move(cfg);

  j["span"] = ordered_json::array({report.span.begin, report.span.end});
  j["distance"] = report.distance;

  ordered_json events = ordered_json::array();
  for (const ReportEvent& e : report.events) {
    ordered_json je;
    je["kind"] = event_kind_name(e.kind);
    je["gt_index"] = opt_to_json(e.gt_index);
    je["pred_index"] = opt_to_json(e.pred_index);
    je["gt"] = e.gt ? segment_to_json(*e.gt, nl) : ordered_json(nullptr);
    je["pred"] = e.pred ? segment_to_json(*e.pred, nl) : ordered_json(nullptr);
    je["cost"] = e.cost;
    events.push_back(std::move(je));
  }
  j["events"] = std::move(events);

  ordered_json labels = ordered_json::array();
  for (const Label& l : report.confusion.labels()) labels.push_back(l.text());
  j["labels"] = std::move(labels);

  ordered_json counts = ordered_json::array();
  for (std::size_t r = 0; r < report.confusion.dimension(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < report.confusion.dimension(); ++c) {
      row.push_back(report.confusion.at(r, c));
    }
    counts.push_back(std::move(row));
  }
  j["confusion"] = std::move(counts);

  ordered_json stats;
  stats["match_count"] = report.stats.match_count;
  stats["mean_latency"] = opt_to_json(report.stats.mean_latency);
  stats["mean_overlap_duration"] = opt_to_json(report.stats.mean_overlap_duration);
  stats["mean_predicted_duration"] = opt_to_json(report.stats.mean_predicted_duration);
  stats["repetition_count_pred"] = report.stats.repetition_count_pred;
  stats["repetition_count_gt"] = report.stats.repetition_count_gt;
  j["match_stats"] = std::move(stats);

  ordered_json metrics;
  metrics["maa"] = opt_to_json(report.metrics.maa);
  metrics["map"] = opt_to_json(report.metrics.map);
  metrics["mar"] = opt_to_json(report.metrics.mar);
  metrics["maf1"] = opt_to_json(report.metrics.maf1);
  metrics["labels_without_precision"] = report.metrics.labels_without_precision;
  metrics["labels_without_recall"] = report.metrics.labels_without_recall;
  ordered_json per_label = ordered_json::array();
  for (const LabelMetrics& lm : report.metrics.per_label) {
    ordered_json jl;
    jl["label"] = lm.label.text();
    jl["tp"] = lm.tp;
    jl["fp"] = lm.fp;
    jl["fn"] = lm.fn;
    jl["tn"] = lm.tn;
    jl["accuracy"] = lm.accuracy;
    jl["precision"] = opt_to_json(lm.precision);
    jl["recall"] = opt_to_json(lm.recall);
    per_label.push_back(std::move(jl));
  }
  metrics["per_label"] = std::move(per_label);
  j["metrics"] = std::move(metrics);

  return j.dump(2) + "\n";
}

EvaluationReport parse_report_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report JSON: ") + e.what());
  }
  try {
    EvaluationReport report;
    const ordered_json& cfg = j.at("config");
    report.config.indel_cost = cfg.at("c0").get<double>();
    report.config.epsilon = cfg.at("eps").get<double>();
    if (!cfg.at("span").is_null()) {
      report.config.span = Span{cfg.at("span").at(0).get<double>(),
                                cfg.at("span").at(1).get<double>()};
    }
    report.config.nl_sentinel = cfg.at("nl").get<std::string>();
    report.config.fill =
        cfg.at("fill").get<std::string>() == "auto" ? FillMode::auto_fill : FillMode::off;
    const std::string& nl = report.config.nl_sentinel;

    report.span = Span{j.at("span").at(0).get<double>(), j.at("span").at(1).get<double>()};
    report.distance = j.at("distance").get<double>();

    for (const ordered_json& je : j.at("events")) {
      ReportEvent e;
      e.kind = event_kind_from_name(je.at("kind").get<std::string>());
      e.gt_index = opt_index_from_json(je.at("gt_index"));
      e.pred_index = opt_index_from_json(je.at("pred_index"));
      if (!je.at("gt").is_null()) e.gt = segment_from_json(je.at("gt"), nl);
      if (!je.at("pred").is_null()) e.pred = segment_from_json(je.at("pred"), nl);
      e.cost = je.at("cost").get<double>();
      report.events.push_back(std::move(e));
    }

    std::vector<Label> labels;
    for (const ordered_json& jl : j.at("labels")) labels.emplace_back(jl.get<std::string>());
    report.confusion = ConfusionMatrix(labels);
    const ordered_json& counts = j.at("confusion");
    for (std::size_t r = 0; r < report.confusion.dimension(); ++r) {
      for (std::size_t c = 0; c < report.confusion.dimension(); ++c) {
        report.confusion.at(r, c) = counts.at(r).at(c).get<std::int64_t>();
      }
    }

    const ordered_json& stats = j.at("match_stats");
    report.stats.match_count = stats.at("match_count").get<std::int64_t>();
    report.stats.mean_latency = opt_double_from_json(stats.at("mean_latency"));
    report.stats.mean_overlap_duration =
        opt_double_from_json(stats.at("mean_overlap_duration"));
    report.stats.mean_predicted_duration =
        opt_double_from_json(stats.at("mean_predicted_duration"));
    report.stats.repetition_count_pred =
        stats.at("repetition_count_pred").get<std::int64_t>();
    report.stats.repetition_count_gt = stats.at("repetition_count_gt").get<std::int64_t>();

    const ordered_json& metrics = j.at("metrics");
    report.metrics.maa = opt_double_from_json(metrics.at("maa"));
    report.metrics.map = opt_double_from_json(metrics.at("map"));
    report.metrics.mar = opt_double_from_json(metrics.at("mar"));
    report.metrics.maf1 = opt_double_from_json(metrics.at("maf1"));
    report.metrics.labels_without_precision =
        metrics.at("labels_without_precision").get<std::int64_t>();
    report.metrics.labels_without_recall =
        metrics.at("labels_without_recall").get<std::int64_t>();
    for (const ordered_json& jl : metrics.at("per_label")) {
      LabelMetrics lm;
      lm.label = Label(jl.at("label").get<std::string>());
      lm.tp = jl.at("tp").get<std::int64_t>();
      lm.fp = jl.at("fp").get<std::int64_t>();
      lm.fn = jl.at("fn").get<std::int64_t>();
      lm.tn = jl.at("tn").get<std::int64_t>();
      lm.accuracy = jl.at("accuracy").get<double>();
      lm.precision = opt_double_from_json(jl.at("precision"));
      lm.recall = opt_double_from_json(jl.at("recall"));
      report.metrics.per_label.push_back(std::move(lm));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("report JSON: ") + e.what());
  }
}

namespace {

std::string segment_cell(std::optional<std::size_t> index, const std::optional<Segment>& s,
                         const std::string& sentinel) {
  if (!index || !s) return "-";
  std::ostringstream out;
  out << *index << " (" << label_text(s->label, sentinel) << "|" << fmt6(s->begin) << "-"
      << fmt6(s->end) << ")";
  return out.str();
}

void pad(std::ostringstream& out, const std::string& cell, std::size_t width) {
  out << cell;
  for (std::size_t k = cell.size(); k < width; ++k) out << ' ';
}

std::string opt_cell(const std::optional<double>& v) {
  return v ? fmt6(*v) : "undefined";
}

}  // namespace

std::string emit_report_text(const EvaluationReport& report) {
  const std::string& nl = report.config.nl_sentinel;
  std::ostringstream out;
  out << "distance: " << fmt6(report.distance) << "\n";
  out << "span: [" << fmt6(report.span.begin) << ", " << fmt6(report.span.end) << "]\n";
  out << "c0: " << fmt6(report.config.indel_cost) << "  eps: " << fmt6(report.config.epsilon)
      << "  fill: " << (report.config.fill == FillMode::auto_fill ? "auto" : "off")
      << "  nl: " << nl << "\n";

  // Back-trace table, last alignment first. Deletions show the segment the
  // other sequence was standing on, reconstructed from the consuming events.
  std::map<std::size_t, Segment> gt_segments;
  std::map<std::size_t, Segment> pred_segments;
  for (const ReportEvent& e : report.events) {
    if (e.gt_index && e.gt) gt_segments.emplace(*e.gt_index, *e.gt);
    if (e.pred_index && e.pred) pred_segments.emplace(*e.pred_index, *e.pred);
  }
  const auto context = [](const std::map<std::size_t, Segment>& segments,
                          std::size_t remaining) -> std::pair<std::optional<std::size_t>,
                                                              std::optional<Segment>> {
    if (segments.empty()) return {std::nullopt, std::nullopt};
    const std::size_t index = remaining > 0 ? remaining - 1 : 0;
    const auto it = segments.find(index);
    if (it == segments.end()) return {std::nullopt, std::nullopt};
    return {index, it->second};
  };

  out << "\nback-trace (last alignment first):\n";
  std::size_t gt_remaining = gt_segments.size();
  std::size_t pred_remaining = pred_segments.size();
  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"GROUND TRUTH", "PREDICTION", "EVENT"});
  for (auto it = report.events.rbegin(); it != report.events.rend(); ++it) {
    const ReportEvent& e = *it;
    std::string gt_cell;
    std::string pred_cell;
    switch (e.kind) {
      case EventKind::correct_match:
      case EventKind::nl_match:
      case EventKind::substitution:
        gt_cell = segment_cell(e.gt_index, e.gt, nl);
        pred_cell = segment_cell(e.pred_index, e.pred, nl);
        --gt_remaining;
        --pred_remaining;
        break;
      case EventKind::gt_deletion:
      case EventKind::nl_deletion_gt: {
        gt_cell = segment_cell(e.gt_index, e.gt, nl);
        const auto [ci, cs] = context(pred_segments, pred_remaining);
        pred_cell = segment_cell(ci, cs, nl);
        --gt_remaining;
        break;
      }
      case EventKind::pred_deletion:
      case EventKind::nl_deletion_pred: {
        pred_cell = segment_cell(e.pred_index, e.pred, nl);
        const auto [ci, cs] = context(gt_segments, gt_remaining);
        gt_cell = segment_cell(ci, cs, nl);
        --pred_remaining;
        break;
      }
    }
    rows.push_back({gt_cell, pred_cell, event_kind_display(e.kind)});
  }
  std::size_t w0 = 0;
  std::size_t w1 = 0;
  for (const auto& row : rows) {
    w0 = std::max(w0, row[0].size());
    w1 = std::max(w1, row[1].size());
  }
  for (const auto& row : rows) {
    out << "  ";
    pad(out, row[0], w0 + 2);
    pad(out, row[1], w1 + 2);
    out << row[2] << "\n";
  }

  out << "\nconfusion matrix (rows = ground truth, columns = prediction):\n";
  std::vector<std::string> names = {nl};
  for (const Label& l : report.confusion.labels()) names.push_back(l.text());
  std::size_t name_width = 2;
  for (const auto& n : names) name_width = std::max(name_width, n.size());
  name_width += 2;
  out << "  ";
  pad(out, "", name_width);
  for (const auto& n : names) pad(out, n, name_width);
  out << "\n";
  for (std::size_t r = 0; r < report.confusion.dimension(); ++r) {
    out << "  ";
    pad(out, names[r], name_width);
    for (std::size_t c = 0; c < report.confusion.dimension(); ++c) {
      pad(out, std::to_string(report.confusion.at(r, c)), name_width);
    }
    out << "\n";
  }

  out << "\nmatches: " << report.stats.match_count << "\n";
  out << "mean latency: " << opt_cell(report.stats.mean_latency) << "\n";
  out << "mean overlap duration: " << opt_cell(report.stats.mean_overlap_duration) << "\n";
  out << "mean predicted duration: " << opt_cell(report.stats.mean_predicted_duration)
      << "\n";
  out << "repetitions in prediction: " << report.stats.repetition_count_pred << "\n";
  out << "repetitions in ground truth: " << report.stats.repetition_count_gt << "\n";

  out << "\nMAA: " << opt_cell(report.metrics.maa) << "\n";
  out << "MAP: " << opt_cell(report.metrics.map);
  if (report.metrics.labels_without_precision > 0) {
    out << " (" << report.metrics.labels_without_precision << " label(s) undefined)";
  }
  out << "\nMAR: " << opt_cell(report.metrics.mar);
  if (report.metrics.labels_without_recall > 0) {
    out << " (" << report.metrics.labels_without_recall << " label(s) undefined)";
  }
  out << "\nMAF1: " << opt_cell(report.metrics.maf1) << "\n";

  if (!report.metrics.per_label.empty()) {
    out << "\nper label:\n";
    out << "  label  tp  fp  fn  tn  precision  recall\n";
    for (const LabelMetrics& lm : report.metrics.per_label) {
      out << "  ";
      pad(out, lm.label.text(), 7);
      pad(out, std::to_string(lm.tp), 4);
      pad(out, std::to_string(lm.fp), 4);
      pad(out, std::to_string(lm.fn), 4);
      pad(out, std::to_string(lm.tn), 4);
      pad(out, opt_cell(lm.precision), 11);
      out << opt_cell(lm.recall) << "\n";
    }
  }
  return out.str();
}

std::string emit_report(const EvaluationReport& report, OutputFormat format) {
  return format == OutputFormat::json ? emit_report_json(report)
                                      : emit_report_text(report);
}

}  // namespace segeval
