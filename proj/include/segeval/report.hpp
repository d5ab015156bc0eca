#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segeval/evaluation.hpp"

namespace segeval {

enum class FillMode { auto_fill, off };
enum class OutputFormat { json, text };

// Everything needed to reproduce a run; echoed verbatim into the report.
struct EvaluationConfig {
  double indel_cost = 2.0;
  Time epsilon = 1.0;
  std::optional<Span> span;  // absent = hull of both sequences
  std::string nl_sentinel = "NL";
  FillMode fill = FillMode::auto_fill;
};

// An edit event joined with the segments it consumed, ready for display.
struct ReportEvent {
  EventKind kind;
  std::optional<std::size_t> gt_index;
  std::optional<std::size_t> pred_index;
  std::optional<Segment> gt;
  std::optional<Segment> pred;
  double cost = 0.0;
};

struct EvaluationReport {
  EvaluationConfig config;
  Span span;  // span actually used
  double distance = 0.0;
  std::vector<ReportEvent> events;  // forward time order
  ConfusionMatrix confusion;
  MatchStats stats;
  MacroMetrics metrics;
};

// Full pipeline on in-memory segments: validate, optionally fill no-label
// gaps over the common span, align, back-trace, count and average.
EvaluationReport evaluate_pair(const std::vector<Segment>& gt_raw,
                               const std::vector<Segment>& pred_raw,
                               const EvaluationConfig& cfg);

// Stable machine-readable document: fixed key order, shortest round-trip
// numbers, no-label rendered as the configured sentinel. parse -> emit is
// byte-identical.
std::string emit_report_json(const EvaluationReport& report);
EvaluationReport parse_report_json(const std::string& text);

// Human-readable view: back-trace table (last alignment first), confusion
// matrix with ground-truth rows, match statistics and macro metrics.
std::string emit_report_text(const EvaluationReport& report);

std::string emit_report(const EvaluationReport& report, OutputFormat format);

const char* event_kind_name(EventKind kind);   // stable identifier, e.g. "correct_match"
const char* event_kind_display(EventKind kind);  // e.g. "mismatch (1 FP and 1 FN)"

}  // namespace segeval
