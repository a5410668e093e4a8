#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bchlab/distance.hpp"
#include "bchlab/harness.hpp"
#include "bchlab/report.hpp"
#include "bchlab/theory.hpp"

using namespace bchlab;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Globals {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint32_t max_table_q = 0;

  AnalyzeOptions options() const {
    AnalyzeOptions o;
    o.engine.threads = std::max(1u, threads);
    if (max_table_q) o = with_table_cap(o, max_table_q);
    return o;
  }
};

std::string support_text(const std::vector<std::uint32_t>& support) {
  std::string s;
  for (auto i : support) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

void print_mismatches(const std::vector<CodeRecord>& records) {
  for (const auto& r : records) {
    if (r.match) continue;
    std::cout << "MISMATCH q=" << r.q << " h=" << r.h << " failed=" << r.failed_checks << "\n" << describe(r);
  }
}

void print_findings(const std::vector<CodeRecord>& records) {
  for (const auto& r : records) {
    if (!r.finding) continue;
    std::cout << "FINDING: q=" << r.q << " h=" << r.h << " resolved prediction d=" << r.resolved_d.value_or(0)
              << " but column search gives d=" << r.d.value_or(0) << "\n";
  }
}

int run_field_info(const Globals& g, std::uint32_t p, std::uint32_t s) {
  FieldOptions fo;
  fo.max_q = g.options().max_table_q;
  const auto f = build_field(p, s, fo);
  std::cout << "p: " << f->p() << "\ns: " << f->s() << "\nq: " << f->q() << "\nsize: " << f->size()
            << "\nmodulus:";
  for (auto c : f->modulus()) std::cout << ' ' << c;
  std::cout << "  (lowest degree first)\nalpha: " << f->alpha().v << "\nbeta: " << f->beta().v
            << "\nbeta order: " << f->order_of(f->beta()) << "\nsubfield:";
  const auto& sub = f->subfield();
  for (std::size_t i = 0; i < std::min<std::size_t>(sub.size(), 16); ++i) std::cout << ' ' << sub[i].v;
  if (sub.size() > 16) std::cout << " ...";
  std::cout << '\n';
  return kOk;
}

int run_code(const Globals& g, std::uint32_t p, std::uint32_t s, std::uint32_t h, std::uint32_t delta, bool json) {
  const AnalyzeOptions opts = g.options();
  if (delta != 3) {
    FieldOptions fo;
    fo.max_q = opts.max_table_q;
    const BchCode code = build_bch(build_field(p, s, fo), delta, h);
    std::cout << "n: " << code.n() << "\nk: " << code.k() << "\nk_dual: " << code.k_dual() << '\n';
    if (code.k() > 0) {
      const auto r = min_distance_by_columns(code, std::min(code.n(), delta + 3), opts.engine);
      std::cout << "d: " << (r.value ? std::to_string(*r.value) : "> " + std::to_string(r.searched_up_to)) << '\n';
    }
    std::cout << "predictions: not applicable for delta != 3\n";
    return kOk;
  }
  const CodeRecord r = analyze(p, s, h, opts);
  if (json) std::cout << to_json(r, false);
  else std::cout << describe(r);
  if (r.finding) print_findings({r});
  if (!r.match) {
    print_mismatches({r});
    return kMismatch;
  }
  return kOk;
}

int run_dual_distance(const Globals& g, std::uint32_t p, std::uint32_t s, std::uint32_t h, const std::string& method) {
  const AnalyzeOptions opts = g.options();
  FieldOptions fo;
  fo.max_q = opts.max_table_q;
  const BchCode code = build_bch(build_field(p, s, fo), 3, h);
  const DistanceResult r = dual_min_distance(code, parse_method(method), opts.engine);
  std::cout << "q: " << code.q() << "\nh: " << h << "\nk_dual: " << code.k_dual() << "\nmethod: " << to_string(r.method)
            << "\nd_dual: " << (r.value ? std::to_string(*r.value) : "-") << "\nsupport: " << support_text(r.support)
            << '\n';
  if (r.trace_pair) std::cout << "trace pair: a=" << r.trace_pair->first.v << " b=" << r.trace_pair->second.v << '\n';
  const bool ok = verify_witness(code, r);
  std::cout << "witness verified: " << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kMismatch;
}

int run_sweep(const Globals& g, const SweepSpec& spec, const std::string& out_path, const std::string& json_path,
              bool stable) {
  const auto records = spec.s_min > spec.s_max ? std::vector<CodeRecord>{} : sweep(spec, g.options());
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  write_csv(out, records, stable);
  if (!json_path.empty()) {
    std::ofstream js(json_path, std::ios::binary);
    if (!js) throw std::runtime_error("cannot open " + json_path);
    js << to_json(records, stable);
  }
  const auto mismatches = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.match; });
  const auto findings = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.finding; });
  std::cout << "sweep: " << records.size() << " rows, " << mismatches << " mismatches, " << findings
            << " findings -> " << out_path << '\n';
  print_findings(records);
  print_mismatches(records);
  return mismatches ? kMismatch : kOk;
}

int run_check_theorems(const Globals& g, std::uint32_t max_q) {
  const TheoremReport report = check_theorems(max_q, g.options());
  std::cout << "check-theorems: " << report.records.size() << " codes with q <= " << max_q << ", "
            << report.mismatches().size() << " mismatches, " << report.findings().size() << " findings\n";
  for (const auto& f : report.families) {
    std::cout << "family " << f.family << " q=" << f.q << " h=" << f.h << ": " << f.claim << " -> k="
              << (f.k ? std::to_string(*f.k) : "-") << " d=" << (f.d ? std::to_string(*f.d) : "-")
              << " d_dual=" << (f.d_dual ? std::to_string(*f.d_dual) : "-") << ' '
              << (f.asserted ? (f.holds ? "OK" : "FAIL") : (f.holds ? "recorded: inside" : "recorded: outside")) << '\n';
  }
  print_findings(report.records);
  print_mismatches(report.records);
  return report.ok() ? kOk : kMismatch;
}

int run_check_conjecture(const Globals& g, const std::string& name, const ConjectureParams& params) {
  const ConjectureReport report = check_conjecture(name, params, g.options());
  for (const auto& i : report.instances) {
    std::cout << name << " p=" << i.p << " s=" << i.s << " q=" << i.q << " h=" << i.h << ": " << to_string(i.status);
    if (i.computed) std::cout << " (computed " << *i.computed << ", expected " << i.expected << ")";
    if (!i.note.empty()) std::cout << " (" << i.note << ")";
    std::cout << '\n';
  }
  if (report.any_refuted()) std::cout << "FINDING: " << name << " refuted by at least one instance\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BCH codes of length q+1: ground truth versus closed-form predictions"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-table-q", g.max_table_q, "Largest q for field tables and search engines")
      ->check(CLI::Range(2u, 65535u));

  std::uint32_t p = 0, s = 0, h = 0, delta = 3, max_q = 0;
  bool json = false, stable = false;
  std::string method = "root-count", out_path, json_path, h_spec = "all", name;
  std::vector<std::uint32_t> primes;
  std::uint32_t s_min = 1, s_max = 0;
  ConjectureParams cparams;
  std::uint32_t conj_s = 0;

  auto* fi = app.add_subcommand("field-info", "Describe GF(p^(2s))");
  fi->add_option("--p", p)->required();
  fi->add_option("--s", s)->required();

  auto* code = app.add_subcommand("code", "Analyze one code");
  code->add_option("--p", p)->required();
  code->add_option("--s", s)->required();
  code->add_option("--h", h)->required();
  code->add_option("--delta", delta)->check(CLI::Range(2u, 9u));
  code->add_flag("--json", json);

  auto* dd = app.add_subcommand("dual-distance", "Minimum distance of the dual");
  dd->add_option("--p", p)->required();
  dd->add_option("--s", s)->required();
  dd->add_option("--h", h)->required();
  dd->add_option("--method", method)->check(CLI::IsMember({"root-count", "dual-enum"}));

  auto* sw = app.add_subcommand("sweep", "Analyze every code over a range of fields");
  sw->add_option("--p", primes)->required()->delimiter(',');
  sw->add_option("--s-min", s_min)->required();
  sw->add_option("--s-max", s_max)->required();
  sw->add_option("--h", h_spec, "all or a comma-separated list");
  sw->add_option("--out", out_path)->required();
  sw->add_option("--json", json_path);
  sw->add_flag("--stable", stable, "Omit runtime_ms");

  auto* ct = app.add_subcommand("check-theorems", "Cross-validate every prediction up to a field size");
  ct->add_option("--max-q", max_q)->required()->check(CLI::Range(2u, 65535u));

  auto* cc = app.add_subcommand("check-conjecture", "Test a conjecture on the instances within the caps");
  cc->add_option("--name", name)->required()->check(CLI::IsMember({"dual-distance-q-p", "even-s-amds"}));
  cc->add_option("--p-max", cparams.p_max);
  cc->add_option("--s", conj_s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*fi) return run_field_info(g, p, s);
    if (*code) return run_code(g, p, s, h, delta, json);
    if (*dd) return run_dual_distance(g, p, s, h, method);
    if (*sw) {
      SweepSpec spec;
      spec.primes = primes;
      spec.s_min = s_min;
      spec.s_max = s_max;
      if (h_spec != "all") {
        std::stringstream ss(h_spec);
        for (std::string item; std::getline(ss, item, ',');) {
          std::size_t pos = 0;
          unsigned long v = 0;
          try {
            v = std::stoul(item, &pos);
          } catch (const std::exception&) {
            pos = 0;
          }
          if (pos == 0 || pos != item.size()) throw std::invalid_argument("bad --h value '" + item + "'");
          spec.h_values.push_back(static_cast<std::uint32_t>(v));
        }
      }
      return run_sweep(g, spec, out_path, json_path, stable);
    }
    if (*ct) return run_check_theorems(g, max_q);
    if (*cc) {
      if (cc->count("--s")) cparams.s = conj_s;
      return run_check_conjecture(g, name, cparams);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
