#include "segeval/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace segeval {

namespace {

constexpr const char* kCsvHeader = "label,t_begin,t_end";

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_number(const std::string& field, const std::string& file, std::size_t line,
                    const char* column) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw ParseError(file, line, std::string(column) + " is not a number: '" + field + "'");
  }
  return value;
}

Label make_label(const std::string& text, const std::string& sentinel) {
  return text == sentinel ? Label::no_label() : Label(text);
}

}  // namespace

std::vector<Segment> parse_sequence_csv(std::istream& in, const std::string& file_name,
                                        const std::string& nl_sentinel) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(file_name, 1, std::string("missing header '") + kCsvHeader + "'");
  }
  if (strip_cr(line) != kCsvHeader) {
    throw ParseError(file_name, 1,
                     std::string("header must be exactly '") + kCsvHeader + "'");
  }

  std::vector<Segment> segments;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::size_t first = line.find(',');
    const std::size_t second = first == std::string::npos ? std::string::npos
                                                          : line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
      throw ParseError(file_name, line_no, "expected 3 columns: label,t_begin,t_end");
    }
    const std::string label = line.substr(0, first);
    const std::string begin = line.substr(first + 1, second - first - 1);
    const std::string end = line.substr(second + 1);
    if (end.find(',') != std::string::npos) {
      throw ParseError(file_name, line_no, "expected 3 columns: label,t_begin,t_end");
    }
    segments.push_back(Segment{make_label(label, nl_sentinel),
                               parse_number(begin, file_name, line_no, "t_begin"),
                               parse_number(end, file_name, line_no, "t_end")});
  }
  return segments;
}

std::vector<Segment> parse_sequence_jsonl(std::istream& in, const std::string& file_name,
                                          const std::string& nl_sentinel) {
  std::vector<Segment> segments;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(file_name, line_no, e.what());
    }
    if (!record.is_object()) {
      throw ParseError(file_name, line_no, "expected one JSON object per line");
    }
    for (const char* key : {"label", "t_begin", "t_end"}) {
      if (!record.contains(key)) {
        throw ParseError(file_name, line_no, std::string("missing key '") + key + "'");
      }
    }
    if (!record["label"].is_string()) {
      throw ParseError(file_name, line_no, "'label' must be a string");
    }
    if (!record["t_begin"].is_number() || !record["t_end"].is_number()) {
      throw ParseError(file_name, line_no, "'t_begin'/'t_end' must be numbers");
    }
    segments.push_back(Segment{make_label(record["label"].get<std::string>(), nl_sentinel),
                               record["t_begin"].get<double>(),
                               record["t_end"].get<double>()});
  }
  return segments;
}

std::vector<Segment> parse_sequence_file(const std::string& path, SequenceFormat format,
                                         const std::string& nl_sentinel) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path, 0, "cannot open file");
  }
  return format == SequenceFormat::csv ? parse_sequence_csv(in, path, nl_sentinel)
                                       : parse_sequence_jsonl(in, path, nl_sentinel);
}

namespace {

// shortest representation that round-trips, reusing the JSON dumper
std::string number_text(double value) {
  return nlohmann::json(value).dump();
}

}  // namespace

std::string format_sequence(const std::vector<Segment>& segments, SequenceFormat format,
                            const std::string& nl_sentinel) {
  std::ostringstream out;
  if (format == SequenceFormat::csv) {
    out << kCsvHeader << "\n";
    for (const Segment& s : segments) {
      out << (s.label.is_no_label() ? nl_sentinel : s.label.text()) << ","
          << number_text(s.begin) << "," << number_text(s.end) << "\n";
    }
  } else {
    for (const Segment& s : segments) {
      nlohmann::ordered_json record{
          {"label", s.label.is_no_label() ? nl_sentinel : s.label.text()},
          {"t_begin", s.begin},
          {"t_end", s.end}};
      out << record.dump() << "\n";
    }
  }
  return out.str();
}

void write_sequence_file(const std::string& path, SequenceFormat format,
                         const std::vector<Segment>& segments,
                         const std::string& nl_sentinel) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write file: " + path);
  }
  out << format_sequence(segments, format, nl_sentinel);
}

EvaluationReport run_evaluation(const std::string& gt_path, const std::string& pred_path,
                                SequenceFormat format, const EvaluationConfig& cfg) {
  const std::vector<Segment> gt = parse_sequence_file(gt_path, format, cfg.nl_sentinel);
  const std::vector<Segment> pred = parse_sequence_file(pred_path, format, cfg.nl_sentinel);
  // validate up front so the diagnostic names the offending file
  try {
    validate_sequence(gt);
  } catch (const ValidationError& e) {
    throw ValidationError(gt_path + ": " + e.what(), e.issues);
  }
  try {
    validate_sequence(pred);
  } catch (const ValidationError& e) {
    throw ValidationError(pred_path + ": " + e.what(), e.issues);
  }
  return evaluate_pair(gt, pred, cfg);
}

}  // namespace segeval
