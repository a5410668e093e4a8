// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance <path-to-bchlab> [work-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "bchlab/distance.hpp"
#include "bchlab/harness.hpp"
#include "bchlab/theory.hpp"

using namespace bchlab;
namespace fs = std::filesystem;

namespace {

// Every comparison below is exact; the only tolerances are wall-clock budgets.
constexpr double kBudget1 = 10.0;
constexpr double kBudget2 = 60.0;
constexpr double kBudget3 = 300.0;
constexpr double kBudget4 = 300.0;
constexpr double kBudget5 = 600.0;
constexpr double kBudget6 = 300.0;
constexpr double kBudget7 = 60.0;
constexpr double kBudget8 = 300.0;
constexpr double kBudget9 = 300.0;
constexpr double kBudget10 = 120.0;
constexpr int kSamples = 1000;
constexpr std::uint32_t kExhaustiveLog2Cap = 26;

struct Outcome {
  bool pass = true;
  std::string detail;
};

EngineOptions engine() {
  EngineOptions e;
  e.threads = std::max(1u, std::thread::hardware_concurrency());
  return e;
}

std::vector<FieldPtr> fields_up_to(std::uint32_t max_q, bool odd_only = false) {
  std::vector<FieldPtr> out;
  for (auto [p, s] : prime_powers_up_to(max_q)) {
    if (odd_only && p == 2) continue;
    // prime_powers_up_to yields q = p^s; the field is GF(q^2) = GF(p^(2s)).
    out.push_back(build_field(p, s));
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  std::size_t codes = 0;
  for (const auto& f : fields_up_to(64)) {
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      const BchCode c = build_bch(f, 3, h);
      ++codes;
      if (c.k() != predict_dimension(f->q(), h) || c.k_dual() != predict_dual_dimension(f->q(), h)) {
        o.pass = false;
        o.detail += " q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  o.detail = std::to_string(codes) + " codes" + o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t codes = 0, threes = 0;
  for (const auto& f : fields_up_to(32)) {
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      const BchCode c = build_bch(f, 3, h);
      if (c.k() == 0) continue;
      ++codes;
      const auto r = min_distance_by_columns(c, 3, engine());
      const bool is3 = r.value.has_value();
      threes += is3;
      if ((r.value && *r.value < 3) || is3 != d3_criterion(f->q(), h) || (is3 && !verify_witness(c, r))) {
        o.pass = false;
        o.detail += " q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  o.detail = std::to_string(codes) + " codes, " + std::to_string(threes) + " with d=3" + o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t codes = 0;
  for (const auto& f : fields_up_to(49, true)) {
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      if (d3_criterion(f->q(), h)) continue;
      const BchCode c = build_bch(f, 3, h);
      ++codes;
      const auto r = min_distance_by_columns(c, 4, engine());
      if (r.value != 4u || !verify_witness(c, r)) {
        o.pass = false;
        o.detail += " q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  o.detail = std::to_string(codes) + " codes with d=4" + o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t direct = 0, via_dual = 0;
  const EngineOptions e = engine();
  for (const auto& f : fields_up_to(9)) {
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      const BchCode c = build_bch(f, 3, h);
      if (c.k() == 0) continue;
      const auto cols = min_distance_by_columns(c, 5, e);
      std::optional<std::uint32_t> other;
      const std::uint64_t words = checked_pow(f->q(), c.k());
      if (words != 0 && words <= (std::uint64_t(1) << kExhaustiveLog2Cap)) {
        const auto ex = exhaustive_min_distance(*f, generator_matrix(c), std::uint64_t(1) << kExhaustiveLog2Cap,
                                                e.threads);
        if (!verify_witness(c, ex)) o.pass = false;
        other = ex.value;
        ++direct;
      } else {
        other = min_distance_via_macwilliams(c, e);
        ++via_dual;
      }
      if (!cols.value || cols.value != other) {
        o.pass = false;
        o.detail += " d:q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  std::size_t duals = 0;
  for (auto [p, s] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    const auto f = build_field(p, s);
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      const BchCode c = build_bch(f, 3, h);
      const auto a = dual_min_distance(c, DistanceMethod::RootCount, e);
      const auto b = dual_min_distance(c, DistanceMethod::DualEnum, e);
      ++duals;
      if (!a.value || a.value != b.value || !verify_witness(c, a) || !verify_witness(c, b)) {
        o.pass = false;
        o.detail += " dual:q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  o.detail = std::to_string(direct) + " exhaustive, " + std::to_string(via_dual) + " via the dual, " +
             std::to_string(duals) + " dual pairs" + o.detail;
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto f = build_field(p, 2);
    const BchCode c = build_bch(f, 3, (p - 1) / 2);
    const auto r = dual_min_distance(c, DistanceMethod::RootCount, engine());
    const bool ok = r.value == f->q() - p && verify_witness(c, r);
    o.pass = o.pass && ok;
    o.detail += " q=" + std::to_string(f->q()) + ":" + (r.value ? std::to_string(*r.value) : "-") +
                (ok ? "" : "(expected " + std::to_string(f->q() - p) + ")");
  }
  return o;
}

struct Spot {
  std::uint32_t p, s, h, n, k, d;
  std::int64_t lo, hi;
};
const Spot kSpots[] = {{3, 3, 4, 28, 24, 4, 18, 24}, {2, 6, 4, 65, 61, 4, 55, 60}, {3, 3, 2, 28, 24, 4, 22, 24}};

std::vector<CodeRecord> spot_records;

Outcome criterion6() {
  Outcome o;
  AnalyzeOptions opts;
  opts.engine = engine();
  for (const Spot& sp : kSpots) {
    const CodeRecord r = analyze(sp.p, sp.s, sp.h, opts);
    spot_records.push_back(r);
    // AMDS means d = n - k; an NMDS code is AMDS as well.
    const bool amds = r.d && r.k && *r.d + *r.k == r.n && (r.cls == "AMDS" || r.cls == "NMDS");
    const bool ok = r.n == sp.n && r.k == sp.k && r.d == sp.d && amds && r.d_dual &&
                    std::int64_t(*r.d_dual) >= sp.lo && std::int64_t(*r.d_dual) <= sp.hi && r.match;
    o.pass = o.pass && ok;
    o.detail += " (" + std::to_string(sp.p) + "," + std::to_string(sp.s) + "," + std::to_string(sp.h) + ")->[" +
                std::to_string(r.n) + "," + std::to_string(r.k.value_or(0)) + "," + std::to_string(r.d.value_or(0)) +
                "] " + r.cls + " d_dual=" + std::to_string(r.d_dual.value_or(0)) + (ok ? "" : " FAIL");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t audited = 0;
  for (const CodeRecord& r : spot_records) {
    if (!r.d || !r.k || !r.d_dual || *r.d + *r.k != r.n || r.q <= 4 * r.h) continue;
    ++audited;
    const std::uint32_t rloc = *r.d_dual - 1;
    const bool ok = singleton_like_max_d(r.q + 1, r.q - 3, rloc) == 4 &&
                    cm_k_optimal(r.n, *r.k, *r.d, rloc, r.q) && locality(*r.d) == 3 && r.d_optimal == true &&
                    r.k_optimal == true;
    o.pass = o.pass && ok;
    o.detail += " q=" + std::to_string(r.q) + ",h=" + std::to_string(r.h) + ",r=" + std::to_string(rloc) +
                (ok ? "" : " FAIL");
  }
  if (audited == 0) o.pass = false;
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  for (auto [p, s] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {2u, 6u}}) {
    const auto f = build_field(p, s);
    const std::uint32_t q = f->q();
    std::uniform_int_distribution<std::uint32_t> hd(0, q), ud(0, q), ed(0, f->size() - 1);
    auto unit = [&] { return f->exp(std::int64_t(q - 1) * ud(rng)); };
    std::map<std::uint32_t, BchCode> codes;
    std::size_t fails[4] = {0, 0, 0, 0}, runs[4] = {0, 0, 0, 0};
    while (runs[0] < kSamples || runs[1] < kSamples || runs[2] < kSamples || runs[3] < kSamples) {
      const std::uint32_t h = hd(rng);
      const Elem x = unit(), y = unit(), z = unit();
      ++runs[0];
      fails[0] += !d_frobenius_holds(*f, x, y, h);
      if (x != y) {
        ++runs[1];
        fails[1] += !e_frobenius_holds(*f, x, y, h);
      }
      ++runs[2];
      const bool plus = rng() & 1;
      fails[2] += det3_direct(*f, x, y, z, h, plus) != det3_factored(*f, x, y, z, h, plus) ||
                  (x != y && y != z && x != z && !dichotomy_holds(*f, x, y, z, h, plus));
      auto it = codes.find(h);
      if (it == codes.end()) it = codes.emplace(h, build_bch(f, 3, h)).first;
      const Elem a{ed(rng)}, b{ed(rng)};
      ++runs[3];
      fails[3] += root_count_weight(*f, h, a, b) != hamming_weight(dual_codeword(it->second, a, b).word);
    }
    const std::size_t total = fails[0] + fails[1] + fails[2] + fails[3];
    o.pass = o.pass && total == 0;
    o.detail += " q=" + std::to_string(q) + ":" + std::to_string(std::min({runs[0], runs[1], runs[2], runs[3]})) +
                "+ samples/" + std::to_string(total) + " failures";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t found = 0;
  for (const auto& f : fields_up_to(49, true)) {
    if (f->q() < 5) continue;
    const Quadruple direct = odd_q_quadruple(*f, f->beta());
    for (std::uint32_t h = 0; h <= f->q(); ++h) {
      if (d3_criterion(f->q(), h)) continue;
      const auto quad = exists_e_quadruple(*f, h);
      const bool ok = quad && validate_quadruple(*f, h, *quad) && validate_quadruple(*f, h, direct);
      found += ok;
      if (!ok) {
        o.pass = false;
        o.detail += " q=" + std::to_string(f->q()) + ",h=" + std::to_string(h);
      }
    }
  }
  o.detail = std::to_string(found) + " (q, h) pairs" + o.detail;
  return o;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion10(const std::string& cli, const fs::path& work) {
  Outcome o;
  std::string files[2];
  for (int i = 0; i < 2; ++i) {
    const fs::path csv = work / ("determinism_" + std::to_string(i) + ".csv");
    const fs::path json = work / ("determinism_" + std::to_string(i) + ".json");
    const std::string cmd = "\"" + cli + "\" sweep --p 2,3,5 --s-min 1 --s-max 2 --stable --out \"" + csv.string() +
                            "\" --json \"" + json.string() + "\" > /dev/null";
    if (std::system(cmd.c_str()) != 0) {
      o.pass = false;
      o.detail = "sweep run " + std::to_string(i) + " failed";
      return o;
    }
    files[i] = slurp(csv) + slurp(json);
  }
  o.pass = !files[0].empty() && files[0] == files[1];
  o.detail = std::to_string(files[0].size()) + " bytes " + (o.pass ? "identical" : "differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <bchlab> [work-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "bchlab_acceptance";
  fs::create_directories(work);

  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "dimension table, q <= 64", kBudget1, criterion1},
      {2, "d = 3 criterion, q <= 32", kBudget2, criterion2},
      {3, "d = 4 for odd q <= 49", kBudget3, criterion3},
      {4, "engine agreement, q <= 9 and dual engines", kBudget4, criterion4},
      {5, "d_dual = q - p for s = 2, p in {5,7,11,13}", kBudget5, criterion5},
      {6, "family spot checks", kBudget6, criterion6},
      {7, "LRC audit", kBudget7, criterion7},
      {8, "identity property suite", kBudget8, criterion8},
      {9, "E-quadruples for odd q <= 49", kBudget9, criterion9},
      {10, "sweep --stable determinism", kBudget10, [&] { return criterion10(cli, work); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget;
    const bool pass = o.pass && in_budget;
    failed += !pass;
    std::printf("%s criterion %d: %s [%.2f s / %.0f s]%s %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget,
                in_budget ? "" : " over budget", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
