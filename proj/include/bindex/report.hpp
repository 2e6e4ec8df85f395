#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bindex {

using json = nlohmann::ordered_json;

enum class Verdict { pass, fail, hypothesis_not_met };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::hypothesis_not_met:
    return "hypothesis_not_met";
  }
  return "?";
}

// Sweep table carried by scans; serialized as CSV on request.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool empty() const noexcept { return header.empty(); }
};

struct VerificationReport {
  std::string claim_id;
  json params = json::object();
  Verdict verdict = Verdict::pass;
  std::vector<std::string> witnesses; // graph6
  json counters = json::object();
  std::vector<std::string> notes;
  Table table;

  bool passed() const noexcept { return verdict != Verdict::fail; }

  // Downgrades the verdict and records why.
  void fail(const std::string& why) {
    verdict = Verdict::fail;
    notes.push_back(why);
  }
};

inline json to_json(const VerificationReport& r) {
  json j;
  j["claim_id"] = r.claim_id;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  j["witnesses"] = r.witnesses;
  j["counters"] = r.counters;
  j["notes"] = r.notes;
  if (!r.table.empty()) {
    json rows = json::array();
    for (const auto& row : r.table.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < r.table.header.size() && i < row.size(); ++i)
        obj[r.table.header[i]] = row[i];
      rows.push_back(obj);
    }
    j["table"] = rows;
  }
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline void csv_row(std::ostringstream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    os << (i ? "," : "") << csv_field(row[i]);
  os << '\n';
}

} // namespace detail

// The sweep table when there is one, otherwise key,value rows of the summary.
inline std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  if (!r.table.empty()) {
    detail::csv_row(os, r.table.header);
    for (const auto& row : r.table.rows)
      detail::csv_row(os, row);
    return os.str();
  }
  detail::csv_row(os, {"key", "value"});
  detail::csv_row(os, {"claim_id", r.claim_id});
  detail::csv_row(os, {"verdict", to_string(r.verdict)});
  for (const auto& [k, v] : r.params.items())
    detail::csv_row(os, {"param." + k, v.is_string() ? v.get<std::string>() : v.dump()});
  for (const auto& [k, v] : r.counters.items())
    detail::csv_row(os, {"counter." + k, v.is_string() ? v.get<std::string>() : v.dump()});
  return os.str();
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace bindex
