#include <algorithm>
#include <sstream>

#include "burnloops/loop.hpp"

namespace burnloops {

std::string write_cayley(const Loop& loop) {
  if (loop.identity() != 0) throw InvalidLoop("Cayley text requires element 0 to be the unit");
  std::ostringstream out;
  out << loop.order() << '\n';
  const auto rows = loop.rows();
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < rows[x].size(); ++y) out << (y ? " " : "") << rows[x][y];
    if (x < loop.labels().size() && !loop.labels()[x].empty()) out << "  # " << loop.labels()[x];
    out << '\n';
  }
  return out.str();
}

Loop read_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> order;
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::string> labels;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string label;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      label = line.substr(hash + 1);
      label.erase(0, label.find_first_not_of(" \t"));
      label.erase(label.find_last_not_of(" \t\r") + 1);
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<long long> values;
    long long v = 0;
    while (fields >> v) values.push_back(v);
    fields.clear();
    std::string rest;
    if (fields >> rest) throw InvalidLoop("line " + std::to_string(line_no) + ": not an integer: " + rest);
    if (values.empty()) continue;
    for (auto x : values) {
      if (x < 0) throw InvalidLoop("line " + std::to_string(line_no) + ": negative entry");
    }
    if (!order) {
      if (values.size() != 1 || values[0] == 0) throw InvalidLoop("first line must hold the positive order");
      order = static_cast<std::size_t>(values[0]);
      continue;
    }
    if (rows.size() == *order) throw InvalidLoop("line " + std::to_string(line_no) + ": more rows than the order");
    if (values.size() != *order) {
      throw InvalidLoop("line " + std::to_string(line_no) + ": expected " + std::to_string(*order) + " entries");
    }
    rows.emplace_back(values.begin(), values.end());
    labels.push_back(label);
  }
  if (!order) throw InvalidLoop("empty Cayley text");
  if (rows.size() != *order) throw InvalidLoop("expected " + std::to_string(*order) + " rows");
  if (std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.empty(); })) labels.clear();
  auto loop = Loop::from_table(rows, std::move(labels));
  if (loop.identity() != 0) throw InvalidLoop("element 0 is not the unit");
  return loop;
}

}  // namespace burnloops
