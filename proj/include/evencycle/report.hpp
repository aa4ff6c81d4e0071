#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evencycle/cycle.hpp"
#include "evencycle/rational.hpp"

namespace evencycle {

/// One structured run record. Field order is fixed by insertion order, so a
/// report serializes byte-identically across runs with equal inputs and seeds.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table_rows;
  std::vector<Cycle> cycles;
  bool include_cycles = false;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  void add(const std::string& key, u64 value) { add(key, std::to_string(value)); }
  void add(const std::string& key, u128 value) { add(key, to_string(value)); }
  void add(const std::string& key, const Rat& value) { add(key, rat_str(value)); }
  void add_bool(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }
};

inline std::string cycle_str(const Cycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c.v[i]);
  }
  return s;
}

inline std::string digest_str(u64 digest) {
  static const char* hex = "0123456789abcdef";
  std::string s = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) s += hex[(digest >> shift) & 0xf];
  return s;
}

inline std::string to_text(const RunReport& r) {
  std::string out = "command: " + r.command + "\n";
  for (const auto& [k, v] : r.fields) out += k + ": " + v + "\n";
  if (r.include_cycles) {
    out += "cycles: " + std::to_string(r.cycles.size()) + "\n";
    for (const auto& c : r.cycles) out += "cycle: " + cycle_str(c) + "\n";
  }
  if (!r.table_header.empty()) {
    std::string head = "table:";
    for (const auto& h : r.table_header) head += " " + h;
    out += head + "\n";
    for (const auto& row : r.table_rows) {
      std::string line = "row:";
      for (const auto& cell : row) line += " " + cell;
      out += line + "\n";
    }
  }
  return out;
}

inline std::string to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  for (const auto& [k, v] : r.fields) j[k] = v;
  if (r.include_cycles) {
    j["cycle_count"] = r.cycles.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.cycles) arr.push_back(cycle_str(c));
    j["cycles"] = arr;
  }
  if (!r.table_header.empty()) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.table_rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size() && i < r.table_header.size(); ++i)
        obj[r.table_header[i]] = row[i];
      rows.push_back(obj);
    }
    j["rows"] = rows;
  }
  return j.dump(2) + "\n";
}

// CSV covers the tabular sub-report only (fixed column order).
inline std::string to_csv(const RunReport& r) {
  if (r.table_header.empty()) throw InvalidArgumentError("no tabular section in this report");
  std::string out;
  for (std::size_t i = 0; i < r.table_header.size(); ++i) {
    if (i) out += ',';
    out += r.table_header[i];
  }
  out += '\n';
  for (const auto& row : r.table_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace evencycle
