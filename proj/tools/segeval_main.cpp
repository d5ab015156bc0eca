#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "segeval/io.hpp"
#include "segeval/synth.hpp"

namespace {

using namespace segeval;

struct CommonOptions {
  std::string format = "csv";
  double c0 = 2.0;
  double eps = 1.0;
  std::string nl = "NL";
};

SequenceFormat parse_format(const std::string& name) {
  return name == "jsonl" ? SequenceFormat::jsonl : SequenceFormat::csv;
}

int run_eval(const std::string& gt_path, const std::string& pred_path,
             const CommonOptions& common, const std::string& span_text,
             const std::string& fill_text, const std::string& output_text) {
  EvaluationConfig cfg;
  cfg.indel_cost = common.c0;
  cfg.epsilon = common.eps;
  cfg.nl_sentinel = common.nl;
  cfg.fill = fill_text == "off" ? FillMode::off : FillMode::auto_fill;
  if (span_text != "auto") {
    const std::size_t comma = span_text.find(',');
    if (comma == std::string::npos) {
      std::cerr << "segeval: --span must be 'begin,end' or 'auto'\n";
      return 1;
    }
    try {
      cfg.span = Span{std::stod(span_text.substr(0, comma)),
                      std::stod(span_text.substr(comma + 1))};
    } catch (const std::exception&) {
      std::cerr << "segeval: --span must be 'begin,end' or 'auto'\n";
      return 1;
    }
  }

  const EvaluationReport report =
      run_evaluation(gt_path, pred_path, parse_format(common.format), cfg);
  std::cout << emit_report(
      report, output_text == "text" ? OutputFormat::text : OutputFormat::json);
  return 0;
}

int run_synth(const CommonOptions& common, const std::string& gt_path,
              const std::string& pred_path, std::uint64_t seed, int segments, int labels,
              double jitter, int swaps, int drops, int spurious, int repetitions) {
  const SegmentSequence base = make_disjoint_sequence(segments, labels);
  const SegmentSequence filled =
      fill_no_label(base, hull(base), TimeResolution{common.eps});

  PerturbationSpec spec;
  spec.seed = seed;
  spec.boundary_jitter = jitter;
  spec.n_label_swaps = swaps;
  spec.n_drops = drops;
  spec.n_spurious = spurious;
  spec.n_repetitions = repetitions;
  spec.resolution = TimeResolution{common.eps};
  const PerturbationResult result = perturb(filled, spec);

  const SequenceFormat format = parse_format(common.format);
  write_sequence_file(gt_path, format, filled.segments(), common.nl);
  write_sequence_file(pred_path, format, result.sequence.segments(), common.nl);
  std::cerr << "wrote " << gt_path << " (" << filled.size() << " segments) and "
            << pred_path << " (" << result.sequence.size() << " segments); planted "
            << result.planted.false_negatives << " FN, " << result.planted.false_positives
            << " FP, " << result.planted.substitutions << " substitutions, "
            << result.planted.repetitions << " repetitions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Aligns a predicted sequence of labeled time-stamped segments against a "
      "ground-truth sequence with an edit distance, then derives a confusion "
      "matrix, latency/duration statistics and macro-averaged metrics."};
  app.name("segeval");

  CommonOptions common;
  std::string gt_path;
  std::string pred_path;
  std::string span_text = "auto";
  std::string fill_text = "auto";
  std::string output_text = "json";

  app.add_option("--gt", gt_path, "ground-truth sequence file");
  app.add_option("--pred", pred_path, "predicted sequence file");
  app.add_option("--format", common.format, "sequence file format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--c0", common.c0, "insertion/deletion penalty")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--eps", common.eps, "time resolution for no-label gap filling")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--span", span_text, "stream span 'begin,end', or 'auto' for the hull")
      ->capture_default_str();
  app.add_option("--nl", common.nl, "sentinel string for the no-label value")
      ->capture_default_str();
  app.add_option("--output", output_text, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--fill", fill_text,
                 "'auto' fills gaps with no-label segments, 'off' expects "
                 "pre-filled input")
      ->check(CLI::IsMember({"auto", "off"}))
      ->capture_default_str();

  auto* synth = app.add_subcommand(
      "synth", "generate a reproducible ground-truth/prediction fixture pair");
  std::string synth_gt = "gt.csv";
  std::string synth_pred = "pred.csv";
  std::uint64_t seed = 1;
  int segments = 10;
  int labels = 4;
  double jitter = 0.0;
  int swaps = 0;
  int drops = 0;
  int spurious = 0;
  int repetitions = 0;
  synth->add_option("--out-gt", synth_gt, "output ground-truth file")->capture_default_str();
  synth->add_option("--out-pred", synth_pred, "output prediction file")
      ->capture_default_str();
  synth->add_option("--seed", seed, "random seed")->capture_default_str();
  synth->add_option("--segments", segments, "number of labeled segments")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--labels", labels, "number of distinct labels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--jitter", jitter, "max boundary jitter")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth->add_option("--swaps", swaps, "planted label swaps")->capture_default_str();
  synth->add_option("--drops", drops, "planted segment drops")->capture_default_str();
  synth->add_option("--spurious", spurious, "planted spurious segments")
      ->capture_default_str();
  synth->add_option("--repetitions", repetitions, "planted repetitions")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (synth->parsed()) {
      return run_synth(common, synth_gt, synth_pred, seed, segments, labels, jitter,
                       swaps, drops, spurious, repetitions);
    }
    if (gt_path.empty() || pred_path.empty()) {
      std::cerr << "segeval: --gt and --pred are required (see --help)\n";
      return 1;
    }
    return run_eval(gt_path, pred_path, common, span_text, fill_text, output_text);
  } catch (const Error& e) {
    std::cerr << "segeval: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "segeval: internal error: " << e.what() << "\n";
    return 2;
  }
}
