#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "segeval/io.hpp"

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

// writes into the test working directory; overwritten on every run
struct TempFile {
  explicit TempFile(std::string name) : path(std::move(name)) {}
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("csv round trip of the golden sequences") {
  const std::vector<Segment> gt = fx::golden_gt_segments();
  const std::string text = format_sequence(gt, SequenceFormat::csv, "NL");
  std::istringstream in(text);
  CHECK(same_segments(parse_sequence_csv(in, "mem", "NL"), gt));
}

TEST_CASE("jsonl round trip of the golden sequences") {
  const std::vector<Segment> pred = fx::golden_pred_segments();
  const std::string text = format_sequence(pred, SequenceFormat::jsonl, "NL");
  std::istringstream in(text);
  CHECK(same_segments(parse_sequence_jsonl(in, "mem", "NL"), pred));
}

TEST_CASE("csv and jsonl encodings parse to identical sequences") {
  for (const auto& segments : {fx::golden_gt_segments(), fx::golden_pred_segments()}) {
    std::istringstream csv(format_sequence(segments, SequenceFormat::csv, "NL"));
    std::istringstream jsonl(format_sequence(segments, SequenceFormat::jsonl, "NL"));
    const auto from_csv = parse_sequence_csv(csv, "mem", "NL");
    const auto from_jsonl = parse_sequence_jsonl(jsonl, "mem", "NL");
    CHECK(same_segments(from_csv, from_jsonl));
    CHECK(same_segments(from_csv, segments));
  }
}

TEST_CASE("csv parser accepts an empty file with header") {
  std::istringstream in("label,t_begin,t_end\n");
  CHECK(parse_sequence_csv(in, "mem", "NL").empty());
}

TEST_CASE("csv parser tolerates CRLF line endings") {
  std::istringstream in("label,t_begin,t_end\r\nA,0,10\r\n");
  const auto segments = parse_sequence_csv(in, "mem", "NL");
  REQUIRE(segments.size() == 1);
  CHECK(segments[0].label == Label("A"));
  CHECK(segments[0].end == 10.0);
}

TEST_CASE("csv parser rejects a wrong header") {
  std::istringstream in("label;t_begin;t_end\n");
  try {
    parse_sequence_csv(in, "mem", "NL");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }
}

TEST_CASE("csv parser rejects bad numbers with the line number") {
  std::istringstream in("label,t_begin,t_end\nA,0,10\nB,abc,20\n");
  try {
    parse_sequence_csv(in, "mem", "NL");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("csv parser rejects missing columns") {
  std::istringstream in("label,t_begin,t_end\nA,0\n");
  CHECK_THROWS_AS(parse_sequence_csv(in, "mem", "NL"), ParseError);
}

TEST_CASE("jsonl parser reports missing keys with the line number") {
  std::istringstream in("{\"label\":\"A\",\"t_begin\":0,\"t_end\":1}\n{\"label\":\"B\"}\n");
  try {
    parse_sequence_jsonl(in, "mem", "NL");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("an inverted interval parses fine and fails validation with its index") {
  std::istringstream in("label,t_begin,t_end\nA,10,5\n");
  const auto segments = parse_sequence_csv(in, "mem", "NL");
  REQUIRE(segments.size() == 1);
  try {
    validate_sequence(segments);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues.size() == 1);
    CHECK(e.issues[0].index == 0);
  }
}

TEST_CASE("the sentinel string is configurable") {
  std::istringstream in("label,t_begin,t_end\nblank,0,10\nNL,11,20\n");
  const auto segments = parse_sequence_csv(in, "mem", "blank");
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].label.is_no_label());
  CHECK_FALSE(segments[1].label.is_no_label());  // "NL" is a user label here
}

TEST_CASE("full evaluation run over golden files") {
  TempFile gt("io_test_gt.csv");
  TempFile pred("io_test_pred.csv");
  write_sequence_file(gt.path, SequenceFormat::csv, fx::golden_gt_segments(), "NL");
  write_sequence_file(pred.path, SequenceFormat::csv, fx::golden_pred_segments(), "NL");

  EvaluationConfig cfg;
  cfg.fill = FillMode::off;
  const EvaluationReport report =
      run_evaluation(gt.path, pred.path, SequenceFormat::csv, cfg);

  CHECK(report.distance == doctest::Approx(fx::golden_distance()).epsilon(1e-12));
  CHECK(report.events.size() == 12);
  REQUIRE(report.stats.mean_latency.has_value());
  CHECK(*report.stats.mean_latency == doctest::Approx(27.5 / 3.0).epsilon(1e-12));

  // repeated runs are bit-identical
  const EvaluationReport again =
      run_evaluation(gt.path, pred.path, SequenceFormat::csv, cfg);
  CHECK(emit_report_json(report) == emit_report_json(again));
}

TEST_CASE("evaluating a file against itself is perfect") {
  TempFile gt("io_test_self.csv");
  write_sequence_file(gt.path, SequenceFormat::csv, fx::golden_gt_segments(), "NL");
  const EvaluationReport report =
      run_evaluation(gt.path, gt.path, SequenceFormat::csv, EvaluationConfig{});
  CHECK(report.distance == 0.0);
  CHECK(*report.metrics.map == 1.0);
  CHECK(*report.metrics.mar == 1.0);
}

TEST_CASE("an empty prediction file yields only false negatives") {
  TempFile gt("io_test_gt2.csv");
  TempFile pred("io_test_pred2.csv");
  write_sequence_file(gt.path, SequenceFormat::csv, fx::golden_gt_segments(), "NL");
  write_sequence_file(pred.path, SequenceFormat::csv, {}, "NL");

  const EvaluationReport report =
      run_evaluation(gt.path, pred.path, SequenceFormat::csv, EvaluationConfig{});
  std::int64_t fn = 0;
  for (std::size_t r = 1; r < report.confusion.dimension(); ++r) {
    fn += report.confusion.at(r, 0);
  }
  CHECK(fn == 5);  // every user-labeled ground-truth segment
  CHECK(report.stats.match_count == 0);
}

TEST_CASE("report json parse and emit are byte-identical") {
  EvaluationConfig cfg;
  cfg.fill = FillMode::off;
  const EvaluationReport report =
      evaluate_pair(fx::golden_gt_segments(), fx::golden_pred_segments(), cfg);
  const std::string text = emit_report_json(report);
  const EvaluationReport parsed = parse_report_json(text);
  CHECK(emit_report_json(parsed) == text);
}

TEST_CASE("an empty input pair still produces a complete report with zero counts") {
  const EvaluationReport report = evaluate_pair({}, {}, EvaluationConfig{});
  CHECK(report.events.empty());
  CHECK(report.distance == 0.0);
  CHECK(report.confusion.total() == 0);
  CHECK(report.stats.match_count == 0);
  CHECK_FALSE(report.metrics.maa.has_value());
  const std::string text = emit_report_json(report);
  CHECK(emit_report_json(parse_report_json(text)) == text);
}

TEST_CASE("text report mirrors the back-trace and matrix layout") {
  EvaluationConfig cfg;
  cfg.fill = FillMode::off;
  const EvaluationReport report =
      evaluate_pair(fx::golden_gt_segments(), fx::golden_pred_segments(), cfg);
  const std::string text = emit_report_text(report);
  CHECK(text.find("5 (1|204-254)") != std::string::npos);
  CHECK(text.find("10 (1|204-254)") != std::string::npos);
  CHECK(text.find("mismatch (1 FP and 1 FN)") != std::string::npos);
  CHECK(text.find("delete NL in PRED") != std::string::npos);
  CHECK(text.find("confusion matrix") != std::string::npos);
  CHECK(text.find("mean latency: 9.16667") != std::string::npos);
  CHECK(text.find("mean predicted duration: 35") != std::string::npos);
}

TEST_CASE("missing files raise a parse error") {
  CHECK_THROWS_AS(
      run_evaluation("no_such_file.csv", "also_missing.csv", SequenceFormat::csv,
                     EvaluationConfig{}),
      ParseError);
}
