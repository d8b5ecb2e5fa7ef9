#include "hlab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hlab {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void aligned_pairs(std::ostringstream& os,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
  size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv)
    os << "  " << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

} // namespace

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "== " << r.command << " ==\n";
  if (!r.inputs.empty()) aligned_pairs(os, r.inputs);
  for (const auto& t : r.tables) {
    os << "  " << t.name << "\n";
    std::vector<size_t> w(t.columns.size(), 0);
    for (size_t j = 0; j < t.columns.size(); ++j) w[j] = t.columns[j].size();
    for (const auto& row : t.rows)
      for (size_t j = 0; j < row.size() && j < w.size(); ++j) w[j] = std::max(w[j], row[j].size());
    auto line = [&](const std::vector<std::string>& row) {
      os << "   ";
      for (size_t j = 0; j < row.size(); ++j)
        os << " " << row[j] << std::string(j < w.size() ? w[j] - row[j].size() : 0, ' ');
      os << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  if (!r.residuals.empty()) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& [k, v] : r.residuals) kv.emplace_back(k, sci(v));
    os << "  residuals\n";
    aligned_pairs(os, kv);
  }
  if (!r.verdicts.empty()) aligned_pairs(os, r.verdicts);
  for (const auto& n : r.notes) os << "  " << n << "\n";
  if (r.seconds > 0) os << "  (" << sci(r.seconds) << " s)\n";
  return os.str();
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["inputs"] = nlohmann::json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["verdicts"] = nlohmann::json::object();
  for (const auto& [k, v] : r.verdicts) j["verdicts"][k] = v;
  j["residuals"] = nlohmann::json::object();
  for (const auto& [k, v] : r.residuals) j["residuals"][k] = v;
  j["tables"] = nlohmann::json::object();
  for (const auto& t : r.tables) j["tables"][t.name] = {{"columns", t.columns}, {"rows", t.rows}};
  j["notes"] = r.notes;
  j["seconds"] = r.seconds;
  j["ok"] = r.ok;
  return j.dump(2) + "\n";
}

void write_report_json(const Report& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << report_json(r);
}

} // namespace hlab
