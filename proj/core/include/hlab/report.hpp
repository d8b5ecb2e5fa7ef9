#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hlab {

// Command output carried in one structure so the text and JSON renderings
// cannot drift apart: both read the same verdicts, residuals and tables.

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<ReportTable> tables;
  std::vector<std::string> notes;
  double seconds = 0.0;
  bool ok = true; // every mathematical check passed

  void input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
  void verdict(const std::string& k, const std::string& v) { verdicts.emplace_back(k, v); }
  void residual(const std::string& k, double v) { residuals.emplace_back(k, v); }
  void note(const std::string& line) { notes.push_back(line); }
};

std::string report_text(const Report& r);
std::string report_json(const Report& r); // serialized, two-space indent
void write_report_json(const Report& r, const std::string& path);

} // namespace hlab
