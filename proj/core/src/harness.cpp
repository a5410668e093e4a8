#include "bchlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "bchlab/parallel.hpp"

namespace bchlab {

AnalyzeOptions with_table_cap(AnalyzeOptions options, std::uint32_t max_q) {
  options.max_table_q = max_q;
  options.engine.column_search_max_q = std::max(options.engine.column_search_max_q, max_q);
  options.engine.root_count_max_q = std::max(options.engine.root_count_max_q, max_q);
  return options;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ';';
    out += s;
  }
  return out;
}

bool within_dual_enum(const BchCode& code, const EngineOptions& e) {
  if (code.q() > e.dual_enum_max_q) return false;
  const std::uint64_t words = checked_pow(code.q(), code.k_dual());
  return words != 0 && words <= e.exhaustive_cap;
}

CodeRecord analyze_in(const FieldPtr& field, std::uint32_t h, const AnalyzeOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldContext& f = *field;
  const std::uint32_t q = f.q();
  if (h > q) throw std::invalid_argument("analyze: h = " + std::to_string(h) + " outside [0, q]");

  CodeRecord r;
  r.p = f.p();
  r.s = f.s();
  r.q = q;
  r.h = h;
  r.n = q + 1;
  r.gcd_2h_plus_1 = static_cast<std::uint32_t>(std::gcd(2 * std::uint64_t(h) + 1, std::uint64_t(q) + 1));

  const BchCode code = build_bch(field, 3, h);
  const std::uint32_t k = code.k();
  r.k = k;
  r.k_dual = code.k_dual();

  const Prediction pred = predict(f, h, options.resolve);
  r.predicted_k = pred.k;
  r.predicted_k_dual = pred.k_dual;
  r.predicted_d = std::string(to_string(pred.d.outcome));
  r.resolved_d = pred.d.resolved;
  if (pred.d_dual_bounds.applicable) {
    r.bounds_lo = pred.d_dual_bounds.lo;
    r.bounds_hi = pred.d_dual_bounds.hi;
  }

  std::vector<std::string> failed;
  if (k != pred.k) failed.emplace_back("k");
  if (code.k_dual() != pred.k_dual) failed.emplace_back("k_dual");

  EngineOptions engine = options.engine;
  if (k > 0 && q <= engine.column_search_max_q) {
    const DistanceResult res = min_distance_by_columns(code, options.w_max, engine);
    r.d_method = std::string(to_string(res.method));
    if (!res.value) failed.emplace_back("d_search");
    else if (!verify_witness(code, res)) failed.emplace_back("witness");
    r.d = res.value;
  }

  std::optional<DistanceResult> root;
  if (q <= engine.root_count_max_q) {
    root = dual_min_distance(code, DistanceMethod::RootCount, engine);
    r.d_dual = root->value;
    r.d_dual_method = std::string(to_string(root->method));
    if (!verify_witness(code, *root)) failed.emplace_back("dual_witness");
  }
  if (options.cross_check_dual && within_dual_enum(code, engine)) {
    const DistanceResult en = dual_min_distance(code, DistanceMethod::DualEnum, engine);
    if (!verify_witness(code, en)) failed.emplace_back("dual_enum_witness");
    if (root) {
      if (root->value != en.value) failed.emplace_back("dual_methods");
      r.d_dual_method += "+dual-enum";
    } else {
      r.d_dual = en.value;
      r.d_dual_method = std::string(to_string(en.method));
    }
  }

  r.cls = std::string(to_string(k == 0 ? CodeClass::Undetermined : classify(r.n, k, r.d, code.k_dual(), r.d_dual)));
  if (r.d_dual && *r.d_dual >= 2) r.locality = locality(*r.d_dual);
  if (k > 0 && r.d && r.d_dual && *r.d_dual >= 2) {
    const LrcAudit audit = lrc_audit(r.n, k, *r.d, *r.d_dual, q);
    r.d_optimal = audit.d_optimal;
    r.k_optimal = audit.k_optimal;
  }

  const bool coprime = r.gcd_2h_plus_1 == 1;
  if (r.d) {
    const std::uint32_t d = *r.d;
    if ((d == 3) != d3_criterion(q, h)) failed.emplace_back("d3");
    switch (pred.d.outcome) {
      case DOutcome::Exactly3:
        if (d != 3) failed.emplace_back("d_pred");
        break;
      case DOutcome::Exactly4:
        if (d != 4) failed.emplace_back("d_pred");
        break;
      case DOutcome::FourOrFive:
        if (d != 4 && d != 5) failed.emplace_back("d_pred");
        if (pred.d.resolved && *pred.d.resolved != d) r.finding = true;
        break;
    }
    if (d < 3) failed.emplace_back("bch_bound");
    if (d > r.n - k + 1) failed.emplace_back("singleton");

    const bool even = q % 2 == 0;
    const bool mds_case = even ? (2 * h == q || h == 0 || h == q)
                               : (h == 0 || h == q || 2 * h + 1 == q || 2 * h == q + 1);
    if (mds_case && r.cls != "MDS") failed.emplace_back("mds");
  }
  if (pred.d_dual_bounds.applicable && r.d_dual &&
      (std::int64_t(*r.d_dual) < pred.d_dual_bounds.lo || std::int64_t(*r.d_dual) > pred.d_dual_bounds.hi))
    failed.emplace_back("dual_bounds");
  const bool amds_hyp = pred.d_dual_bounds.applicable && coprime && pred.d_dual_bounds.m >= 4;
  if (amds_hyp && r.d && (*r.d != 4 || k + 3 != q)) failed.emplace_back("amds_m4");
  if (q % 2 == 1 && q > 4 && h == 1 && std::gcd(3u, q + 1) == 1 && r.d && r.d_dual &&
      (r.cls != "NMDS" || code.k_dual() != 4 || *r.d_dual + 3 != q))
    failed.emplace_back("nmds_h1");
  if (amds_hyp && q > 2 * h + 2 && q > 4 * h && r.d_optimal && r.k_optimal && !(*r.d_optimal && *r.k_optimal))
    failed.emplace_back("lrc");

  r.failed_checks = join(failed);
  r.match = failed.empty();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.runtime_ms = std::round(ms * 1000.0) / 1000.0;
  return r;
}

FieldPtr field_for(std::uint32_t p, std::uint32_t s, const AnalyzeOptions& options) {
  FieldOptions fo;
  fo.max_q = options.max_table_q;
  return build_field(p, s, fo);
}

}  // namespace

CodeRecord analyze(std::uint32_t p, std::uint32_t s, std::uint32_t h, const AnalyzeOptions& options) {
  return analyze_in(field_for(p, s, options), h, options);
}

std::vector<CodeRecord> sweep(const SweepSpec& spec, const AnalyzeOptions& options) {
  std::vector<std::uint32_t> primes = spec.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p)) throw std::invalid_argument("sweep: " + std::to_string(p) + " is not prime");
  if (spec.s_min == 0) throw std::invalid_argument("sweep: s must be at least 1");

  struct Job {
    FieldPtr field;
    std::uint32_t h;
  };
  std::vector<Job> jobs;
  for (auto p : primes) {
    for (std::uint32_t s = spec.s_min; s <= spec.s_max; ++s) {
      const std::uint64_t q = checked_pow(p, s);
      if (q == 0 || q > options.max_table_q) break;
      const FieldPtr field = field_for(p, s, options);
      if (spec.h_values.empty()) {
        for (std::uint32_t h = 0; h <= q; ++h) jobs.push_back({field, h});
      } else {
        for (auto h : spec.h_values)
          if (h <= q) jobs.push_back({field, h});
      }
    }
  }

  const unsigned threads = std::max(1u, options.engine.threads);
  AnalyzeOptions row_options = options;
  if (jobs.size() >= threads) row_options.engine.threads = 1;
  std::vector<CodeRecord> out(jobs.size());
  parallel_for(jobs.size(), jobs.size() >= threads ? threads : 1,
               [&](std::size_t i) { out[i] = analyze_in(jobs[i].field, jobs[i].h, row_options); });
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_up_to(std::uint32_t max_q) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p <= max_q; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t s = 1; q <= max_q; ++s, q *= p) out.emplace_back(p, s);
  }
  return out;
}

bool TheoremReport::ok() const {
  for (const auto& r : records)
    if (!r.match) return false;
  for (const auto& f : families)
    if (f.asserted && !f.holds) return false;
  return true;
}

std::vector<CodeRecord> TheoremReport::mismatches() const {
  std::vector<CodeRecord> out;
  for (const auto& r : records)
    if (!r.match) out.push_back(r);
  return out;
}

std::vector<CodeRecord> TheoremReport::findings() const {
  std::vector<CodeRecord> out;
  for (const auto& r : records)
    if (r.finding) out.push_back(r);
  return out;
}

namespace {

struct FamilySpec {
  std::string name;
  std::uint32_t p, s, h;
};

std::vector<FamilySpec> family_instances(std::uint32_t max_q) {
  std::vector<FamilySpec> out;
  auto add_range = [&](const std::string& name, std::uint32_t p, std::uint32_t h, std::uint32_t s_min, auto keep) {
    for (std::uint32_t s = s_min;; ++s) {
      const std::uint64_t q = checked_pow(p, s);
      if (q == 0 || q > max_q) break;
      if (keep(s)) out.push_back({name, p, s, h});
    }
  };
  auto all = [](std::uint32_t) { return true; };
  add_range("p3-h4", 3, 4, 3, all);
  for (std::uint32_t p = 3; std::uint64_t(p) * p <= max_q; p += 2)
    if (is_prime(p)) add_range("h-half-p", p, (p - 1) / 2, 2, all);
  add_range("p2-h4", 2, 4, 6, [](std::uint32_t s) { return s % 4 == 2; });
  add_range("p3-h2", 3, 2, 3, [](std::uint32_t s) { return s % 4 != 2; });
  add_range("p5-h3", 5, 3, 2, [](std::uint32_t s) { return s % 6 != 3; });
  add_range("p7-h4", 7, 4, 2, all);
  return out;
}

std::string range_text(std::int64_t lo, std::int64_t hi) {
  return lo == hi ? "d_dual = " + std::to_string(lo) : "d_dual in [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::vector<FamilyCheck> evaluate_family(const FamilySpec& fam, const CodeRecord& r) {
  const std::int64_t q = r.q;
  const std::uint32_t s = fam.s;
  std::int64_t lo = 0, hi = 0;
  bool recorded_only = false;
  if (fam.name == "p3-h4") {
    lo = q - 9;
    hi = s % 2 ? q - 3 : q - 9;
  } else if (fam.name == "h-half-p") {
    lo = q - fam.p;
    hi = s % 2 ? q - fam.p : q - 3;
    recorded_only = s % 2 == 0;
  } else if (fam.name == "p2-h4") {
    lo = q - 9;
    hi = q - 4;
  } else if (fam.name == "p3-h2") {
    lo = q - 5;
    hi = q - 3;
  } else if (fam.name == "p5-h3") {
    lo = q - 7;
    hi = s % 2 ? q - 5 : q - 3;
  } else {
    lo = q - 9;
    hi = s % 4 == 2 ? q - 9 : (s % 2 ? q - 7 : q - 3);
  }

  auto base = [&] {
    FamilyCheck c;
    c.family = fam.name;
    c.p = fam.p;
    c.s = fam.s;
    c.q = r.q;
    c.h = fam.h;
    c.k = r.k;
    c.d = r.d;
    c.d_dual = r.d_dual;
    return c;
  };
  const bool computed = r.k && r.d && r.d_dual;
  std::vector<FamilyCheck> out;

  FamilyCheck params = base();
  params.claim = "[" + std::to_string(q + 1) + "," + std::to_string(q - 3) + ",4]";
  if (fam.name != "p5-h3") params.claim += " AMDS";
  params.claim += ", d- and k-optimal LRC, dual locality 3";
  params.asserted = computed;
  params.holds = computed && *r.k + 3 == r.q && *r.d == 4 && r.d_optimal.value_or(false) &&
                 r.k_optimal.value_or(false) && r.k_dual == 4u;
  if (!recorded_only) {
    params.claim += ", " + range_text(lo, hi);
    params.holds = params.holds && std::int64_t(*r.d_dual) >= lo && std::int64_t(*r.d_dual) <= hi;
  }
  if (!computed) params.claim += " (uncomputed)";
  out.push_back(params);

  if (recorded_only) {
    FamilyCheck rec = base();
    rec.claim = range_text(lo, hi) + " (recorded)";
    rec.asserted = false;
    rec.holds = r.d_dual && std::int64_t(*r.d_dual) >= lo && std::int64_t(*r.d_dual) <= hi;
    out.push_back(rec);
  }
  return out;
}

std::vector<FamilyCheck> families_from(std::uint32_t max_q, const AnalyzeOptions& options,
                                       const std::vector<CodeRecord>* cache) {
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, const CodeRecord*> index;
  if (cache)
    for (const auto& r : *cache) index[{r.p, r.s, r.h}] = &r;
  std::vector<FamilyCheck> out;
  for (const auto& fam : family_instances(std::min(max_q, options.max_table_q))) {
    const auto it = index.find({fam.p, fam.s, fam.h});
    const CodeRecord r = it != index.end() ? *it->second : analyze(fam.p, fam.s, fam.h, options);
    for (auto& c : evaluate_family(fam, r)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<FamilyCheck> check_families(std::uint32_t max_q, const AnalyzeOptions& options) {
  return families_from(max_q, options, nullptr);
}

TheoremReport check_theorems(std::uint32_t max_q, const AnalyzeOptions& options) {
  TheoremReport report;
  for (const auto& [p, s] : prime_powers_up_to(std::min(max_q, options.max_table_q))) {
    SweepSpec spec{{p}, s, s, {}};
    auto rows = sweep(spec, options);
    report.records.insert(report.records.end(), rows.begin(), rows.end());
  }
  report.families = families_from(max_q, options, &report.records);
  return report;
}

std::string_view to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Confirmed: return "CONFIRMED";
    case ConjectureStatus::Refuted: return "REFUTED";
    case ConjectureStatus::Unreached: return "UNREACHED";
  }
  return "UNKNOWN";
}

bool ConjectureReport::any_refuted() const {
  return std::any_of(instances.begin(), instances.end(),
                     [](const ConjectureInstance& i) { return i.status == ConjectureStatus::Refuted; });
}

ConjectureReport check_conjecture(const std::string& name, const ConjectureParams& params,
                                  const AnalyzeOptions& options) {
  ConjectureReport report;
  report.name = name;
  const EngineOptions& engine = options.engine;
  if (name == "dual-distance-q-p") {
    const std::uint32_t s = params.s.value_or(2);
    if (s < 2) throw std::invalid_argument("dual-distance-q-p: s must be at least 2");
    for (std::uint32_t p = 3; p <= params.p_max; p += 2) {
      if (!is_prime(p)) continue;
      ConjectureInstance inst;
      inst.p = p;
      inst.s = s;
      inst.h = (p - 1) / 2;
      const std::uint64_t q = checked_pow(p, s);
      inst.q = q != 0 && q <= UINT32_MAX ? static_cast<std::uint32_t>(q) : 0;
      inst.expected = inst.q >= p ? inst.q - p : 0;
      if (p == 3) {
        inst.note = "p = 3 excluded: h = 1 is the NMDS case";
      } else if (q == 0 || q > options.max_table_q || q > engine.root_count_max_q) {
        inst.note = "q exceeds the root-count cap";
      } else {
        const BchCode code = build_bch(field_for(p, s, options), 3, inst.h);
        const DistanceResult res = dual_min_distance(code, DistanceMethod::RootCount, engine);
        if (!res.value || !verify_witness(code, res))
          throw std::logic_error("dual-distance-q-p: root count produced no verified witness");
        inst.computed = res.value;
        inst.status = *res.value == inst.expected ? ConjectureStatus::Confirmed : ConjectureStatus::Refuted;
      }
      report.instances.push_back(inst);
    }
    return report;
  }
  if (name == "even-s-amds") {
    std::vector<std::uint32_t> s_values = params.s ? std::vector<std::uint32_t>{*params.s}
                                                   : std::vector<std::uint32_t>{6, 8, 10, 12};
    for (auto s : s_values) {
      if (s < 6 || s % 2) throw std::invalid_argument("even-s-amds: s must be even and at least 6");
      ConjectureInstance inst;
      inst.p = 2;
      inst.s = s;
      inst.h = 4;
      inst.expected = 4;
      const std::uint64_t q = checked_pow(2, s);
      inst.q = q != 0 && q <= UINT32_MAX ? static_cast<std::uint32_t>(q) : 0;
      if (q == 0 || q > options.max_table_q || q > engine.column_search_max_q) {
        inst.note = "q exceeds the column-search cap";
      } else {
        const BchCode code = build_bch(field_for(2, s, options), 3, 4);
        const DistanceResult res = min_distance_by_columns(code, 5, engine);
        if (!res.value || !verify_witness(code, res))
          throw std::logic_error("even-s-amds: column search produced no verified witness");
        inst.computed = res.value;
        const bool amds = *res.value == 4 && code.k() + 3 == code.q();
        inst.status = amds ? ConjectureStatus::Confirmed : ConjectureStatus::Refuted;
      }
      report.instances.push_back(inst);
    }
    return report;
  }
  throw std::invalid_argument("unknown conjecture '" + name + "'");
}

}  // namespace bchlab
