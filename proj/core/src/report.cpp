#include "bchlab/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bchlab {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kColumns = {
    "p",         "s",          "q",           "h",           "n",          "k",
    "d",         "k_dual",     "d_dual",      "gcd_2h_plus_1", "class",    "locality",
    "d_optimal", "k_optimal",  "predicted_k", "predicted_k_dual", "predicted_d", "resolved_d",
    "bounds_lo", "bounds_hi",  "match",       "finding",     "failed_checks", "d_method",
    "d_dual_method", "runtime_ms"};

template <class T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string opt_bool_text(const std::optional<bool>& b) { return b ? bool_text(*b) : std::string(); }

std::string runtime_text(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::vector<std::string> fields_of(const CodeRecord& r, bool stable) {
  std::vector<std::string> f = {
      std::to_string(r.p),         std::to_string(r.s),       std::to_string(r.q),
      std::to_string(r.h),         std::to_string(r.n),       opt_text(r.k),
      opt_text(r.d),               opt_text(r.k_dual),        opt_text(r.d_dual),
      std::to_string(r.gcd_2h_plus_1), r.cls,                 opt_text(r.locality),
      opt_bool_text(r.d_optimal),  opt_bool_text(r.k_optimal), opt_text(r.predicted_k),
      opt_text(r.predicted_k_dual), r.predicted_d,            opt_text(r.resolved_d),
      opt_text(r.bounds_lo),       opt_text(r.bounds_hi),     bool_text(r.match),
      bool_text(r.finding),        r.failed_checks,           r.d_method,
      r.d_dual_method};
  if (!stable) f.push_back(runtime_text(r.runtime_ms));
  return f;
}

std::uint32_t parse_u32(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos);
  if (pos != s.size() || v > UINT32_MAX) throw std::runtime_error("bad integer '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

std::int64_t parse_i64(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::runtime_error("bad integer '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error("bad boolean '" + s + "'");
}

std::optional<std::uint32_t> opt_u32(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_u32(s);
}

std::optional<std::int64_t> opt_i64(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_i64(s);
}

std::optional<bool> opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_bool(s);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json record_json(const CodeRecord& r, bool stable) {
  ordered_json j;
  j["p"] = r.p;
  j["s"] = r.s;
  j["q"] = r.q;
  j["h"] = r.h;
  j["n"] = r.n;
  j["k"] = opt_json(r.k);
  j["d"] = opt_json(r.d);
  j["k_dual"] = opt_json(r.k_dual);
  j["d_dual"] = opt_json(r.d_dual);
  j["gcd_2h_plus_1"] = r.gcd_2h_plus_1;
  j["class"] = r.cls;
  j["locality"] = opt_json(r.locality);
  j["d_optimal"] = opt_json(r.d_optimal);
  j["k_optimal"] = opt_json(r.k_optimal);
  j["predicted_k"] = opt_json(r.predicted_k);
  j["predicted_k_dual"] = opt_json(r.predicted_k_dual);
  j["predicted_d"] = r.predicted_d;
  j["resolved_d"] = opt_json(r.resolved_d);
  j["bounds_lo"] = opt_json(r.bounds_lo);
  j["bounds_hi"] = opt_json(r.bounds_hi);
  j["match"] = r.match;
  j["finding"] = r.finding;
  j["failed_checks"] = r.failed_checks;
  j["d_method"] = r.d_method;
  j["d_dual_method"] = r.d_dual_method;
  if (!stable) j["runtime_ms"] = r.runtime_ms;
  return j;
}

template <class T>
std::optional<T> get_opt(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

CodeRecord record_from(const ordered_json& j) {
  CodeRecord r;
  r.p = j.at("p").get<std::uint32_t>();
  r.s = j.at("s").get<std::uint32_t>();
  r.q = j.at("q").get<std::uint32_t>();
  r.h = j.at("h").get<std::uint32_t>();
  r.n = j.at("n").get<std::uint32_t>();
  r.k = get_opt<std::uint32_t>(j, "k");
  r.d = get_opt<std::uint32_t>(j, "d");
  r.k_dual = get_opt<std::uint32_t>(j, "k_dual");
  r.d_dual = get_opt<std::uint32_t>(j, "d_dual");
  r.gcd_2h_plus_1 = j.at("gcd_2h_plus_1").get<std::uint32_t>();
  r.cls = j.at("class").get<std::string>();
  r.locality = get_opt<std::uint32_t>(j, "locality");
  r.d_optimal = get_opt<bool>(j, "d_optimal");
  r.k_optimal = get_opt<bool>(j, "k_optimal");
  r.predicted_k = get_opt<std::uint32_t>(j, "predicted_k");
  r.predicted_k_dual = get_opt<std::uint32_t>(j, "predicted_k_dual");
  r.predicted_d = j.at("predicted_d").get<std::string>();
  r.resolved_d = get_opt<std::uint32_t>(j, "resolved_d");
  r.bounds_lo = get_opt<std::int64_t>(j, "bounds_lo");
  r.bounds_hi = get_opt<std::int64_t>(j, "bounds_hi");
  r.match = j.at("match").get<bool>();
  r.finding = j.at("finding").get<bool>();
  r.failed_checks = j.at("failed_checks").get<std::string>();
  r.d_method = j.at("d_method").get<std::string>();
  r.d_dual_method = j.at("d_dual_method").get<std::string>();
  r.runtime_ms = j.value("runtime_ms", 0.0);
  return r;
}

}  // namespace

std::vector<std::string> csv_columns(bool stable) {
  std::vector<std::string> cols = kColumns;
  if (stable) cols.pop_back();
  return cols;
}

void write_csv(std::ostream& out, const std::vector<CodeRecord>& records, bool stable) {
  const auto cols = csv_columns(stable);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) {
    const auto f = fields_of(r, stable);
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << '\n';
  }
}

std::vector<CodeRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: missing header");
  const auto header = split(line);
  const bool stable = header == csv_columns(true);
  if (!stable && header != csv_columns(false)) throw std::runtime_error("read_csv: unexpected header");
  std::vector<CodeRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) throw std::runtime_error("read_csv: wrong field count");
    try {
      CodeRecord r;
      r.p = parse_u32(f[0]);
      r.s = parse_u32(f[1]);
      r.q = parse_u32(f[2]);
      r.h = parse_u32(f[3]);
      r.n = parse_u32(f[4]);
      r.k = opt_u32(f[5]);
      r.d = opt_u32(f[6]);
      r.k_dual = opt_u32(f[7]);
      r.d_dual = opt_u32(f[8]);
      r.gcd_2h_plus_1 = parse_u32(f[9]);
      r.cls = f[10];
      r.locality = opt_u32(f[11]);
      r.d_optimal = opt_bool(f[12]);
      r.k_optimal = opt_bool(f[13]);
      r.predicted_k = opt_u32(f[14]);
      r.predicted_k_dual = opt_u32(f[15]);
      r.predicted_d = f[16];
      r.resolved_d = opt_u32(f[17]);
      r.bounds_lo = opt_i64(f[18]);
      r.bounds_hi = opt_i64(f[19]);
      r.match = parse_bool(f[20]);
      r.finding = parse_bool(f[21]);
      r.failed_checks = f[22];
      r.d_method = f[23];
      r.d_dual_method = f[24];
      if (!stable) r.runtime_ms = std::stod(f[25]);
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw std::runtime_error(std::string("read_csv: ") + e.what());
    }
  }
  return out;
}

std::string to_json(const CodeRecord& record, bool stable) { return record_json(record, stable).dump(2) + "\n"; }

std::string to_json(const std::vector<CodeRecord>& records, bool stable) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) arr.push_back(record_json(r, stable));
  return arr.dump(2) + "\n";
}

std::vector<CodeRecord> from_json(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    std::vector<CodeRecord> out;
    if (j.is_array()) {
      for (const auto& e : j) out.push_back(record_from(e));
    } else {
      out.push_back(record_from(j));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("from_json: ") + e.what());
  }
}

std::string describe(const CodeRecord& r) {
  std::ostringstream os;
  const auto cols = csv_columns(false);
  const auto f = fields_of(r, false);
  for (std::size_t i = 0; i < cols.size(); ++i) os << "  " << cols[i] << ": " << (f[i].empty() ? "-" : f[i]) << '\n';
  return os.str();
}

}  // namespace bchlab
