#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "segeval/report.hpp"
#include "segeval/segment.hpp"

namespace segeval {

enum class SequenceFormat { csv, jsonl };

// CSV with the exact header "label,t_begin,t_end", or JSON Lines with keys
// "label" / "t_begin" / "t_end". A label equal to the sentinel maps to the
// no-label value. Segments come back in file order, unvalidated.
std::vector<Segment> parse_sequence_file(const std::string& path, SequenceFormat format,
                                         const std::string& nl_sentinel);

std::vector<Segment> parse_sequence_csv(std::istream& in, const std::string& file_name,
                                        const std::string& nl_sentinel);
std::vector<Segment> parse_sequence_jsonl(std::istream& in, const std::string& file_name,
                                          const std::string& nl_sentinel);

std::string format_sequence(const std::vector<Segment>& segments, SequenceFormat format,
                            const std::string& nl_sentinel);
void write_sequence_file(const std::string& path, SequenceFormat format,
                         const std::vector<Segment>& segments,
                         const std::string& nl_sentinel);

// parse both files -> validate -> fill -> align -> back-trace -> report.
EvaluationReport run_evaluation(const std::string& gt_path, const std::string& pred_path,
                                SequenceFormat format, const EvaluationConfig& cfg);

}  // namespace segeval
