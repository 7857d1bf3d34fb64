#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"
#include "permfe/oracle.hpp"
#include "permfe/seqtools.hpp"
#include "permfe/verify.hpp"

namespace fs = std::filesystem;
using namespace permfe;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRefused = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string pattern;
  std::vector<std::string> patterns;
  std::optional<int> r;
  int r1 = 0;
  int r2 = 0;
  int s = 0;
  int n = 10;
  bool q = false;
  std::string format = "plain";
  int oracle_limit = kDefaultOracleLimit;
  int full_limit = 11;
  std::size_t memo_limit = 0;
  int threads = 0;
  std::string cache_dir;
};

std::string supported_single() {
  std::string out;
  for (Engine e : all_engines()) out += engine_pattern(e) + " ";
  return out + "(and 1432, served by the 2341 engine)";
}

Engine resolve_engine(const std::string& name, std::string* note) {
  if (auto e = engine_for_pattern(name, note)) return *e;
  throw UsageError("unsupported pattern \"" + name + "\"; supported: " +
                   supported_single());
}

JointEngine resolve_joint(const std::vector<std::string>& names) {
  if (names.size() == 2) {
    if (auto e = joint_engine_for(names[0], names[1])) return *e;
  }
  std::string given;
  for (const auto& n : names) given += (given.empty() ? "" : ",") + n;
  throw UsageError("unsupported pattern pair \"" + given +
                   "\"; supported: 123,132 and 1234,1243");
}

Format resolve_format(const std::string& name) {
  if (auto f = parse_format(name)) return *f;
  throw UsageError("unknown format \"" + name + "\"; use bfile, json, csv or plain");
}

EvalOptions eval_options(const Config& cfg) {
  EvalOptions opts;
  if (cfg.memo_limit > 0) {
    opts.mode = EvalMode::Serial;
    opts.memo_limit = cfg.memo_limit;
  }
  return opts;
}

void check_nonnegative(int v, const char* what) {
  if (v < 0) throw UsageError(std::string(what) + " must be >= 0");
}

void check_n(int n) {
  if (n < 1) throw UsageError("--n must be >= 1");
}

std::string with_newline(std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

// Opt-in cache of computed sequences, keyed by engine and parameters.
std::optional<SequenceRecord> cache_load(const Config& cfg, const std::string& key,
                                         int n_max) {
  if (cfg.cache_dir.empty()) return std::nullopt;
  std::ifstream in(fs::path(cfg.cache_dir) / (key + ".json"));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    SequenceRecord rec = parse_json(buf.str());
    if (static_cast<int>(rec.values.size()) < n_max) return std::nullopt;
    rec.values.resize(n_max);
    return rec;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

void cache_store(const Config& cfg, const std::string& key,
                 const SequenceRecord& rec) {
  if (cfg.cache_dir.empty()) return;
  std::error_code ec;
  fs::create_directories(cfg.cache_dir, ec);
  const fs::path target = fs::path(cfg.cache_dir) / (key + ".json");
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << emit(rec, Format::json);
  }
  fs::rename(tmp, target, ec);
}

int cmd_sequence(const Config& cfg) {
  if (!cfg.r) throw UsageError("sequence needs --r");
  check_nonnegative(*cfg.r, "--r");
  check_n(cfg.n);
  if (cfg.q) throw UsageError("--q applies to fullpoly only");
  const Format format = resolve_format(cfg.format);
  std::string note;
  const Engine e = resolve_engine(cfg.pattern, &note);

  const std::string key = "seq-" + engine_pattern(e) + "-r" + std::to_string(*cfg.r);
  SequenceRecord rec;
  if (auto cached = cache_load(cfg, key, cfg.n)) {
    rec = std::move(*cached);
  } else {
    rec.engine = engine_pattern(e);
    rec.patterns = {engine_pattern(e)};
    rec.r = *cfg.r;
    rec.values = single_sequence(e, *cfg.r, cfg.n, eval_options(cfg));
    cache_store(cfg, key, rec);
  }
  if (!note.empty()) {
    rec.patterns = {cfg.pattern};
    rec.note = note;
    if (format != Format::json) std::cerr << "note: " << note << '\n';
  }
  std::cout << with_newline(emit(rec, format));
  return kOk;
}

int cmd_joint(const Config& cfg) {
  check_nonnegative(cfg.r1, "--r1");
  check_nonnegative(cfg.r2, "--r2");
  check_n(cfg.n);
  if (cfg.q) throw UsageError("--q applies to fullpoly only");
  const Format format = resolve_format(cfg.format);
  const JointEngine e = resolve_joint(cfg.patterns);
  const auto names = joint_patterns(e);

  const std::string key = "joint-" + names[0] + "-" + names[1] + "-r" +
                          std::to_string(cfg.r1) + "-" + std::to_string(cfg.r2);
  SequenceRecord rec;
  if (auto cached = cache_load(cfg, key, cfg.n)) {
    rec = std::move(*cached);
  } else {
    rec.engine = names[0] + "+" + names[1];
    rec.patterns = names;
    rec.r1 = cfg.r1;
    rec.r2 = cfg.r2;
    rec.values = joint_sequence(e, cfg.r1, cfg.r2, cfg.n, eval_options(cfg));
    cache_store(cfg, key, rec);
  }
  std::cout << with_newline(emit(rec, format));
  return kOk;
}

int cmd_fullpoly(const Config& cfg) {
  check_n(cfg.n);
  if (cfg.format != "plain" && cfg.format != "json") {
    throw UsageError("fullpoly supports --format plain or json");
  }
  if (cfg.r) check_nonnegative(*cfg.r, "--r");
  if (!cfg.r && cfg.n > cfg.full_limit) {
    throw LimitExceeded("full polynomial for n=" + std::to_string(cfg.n) +
                        " exceeds the full-mode limit " +
                        std::to_string(cfg.full_limit) +
                        " (raise it with --full-limit, or truncate with --r)");
  }
  const Cap cap = cfg.r ? Cap(*cfg.r) : kFull;
  std::unique_ptr<RecursionScheme> scheme;
  if (!cfg.patterns.empty()) {
    scheme = make_joint_scheme(resolve_joint(cfg.patterns), cap, cap, cfg.q);
  } else {
    std::string note;
    scheme = make_scheme(resolve_engine(cfg.pattern, &note), cap, cfg.q);
    if (!note.empty()) std::cerr << "note: " << note << '\n';
  }
  const TruncatedPoly poly = evaluate_length(*scheme, cfg.n, eval_options(cfg));
  std::cout << (cfg.format == "json" ? poly.to_json() : poly.to_string()) << '\n';
  return kOk;
}

std::vector<Permutation> oracle_patterns(const Config& cfg) {
  std::vector<std::string> names = cfg.patterns;
  if (!cfg.pattern.empty()) names.insert(names.begin(), cfg.pattern);
  if (names.empty()) throw UsageError("oracle needs --pattern or --patterns");
  std::vector<Permutation> out;
  for (const auto& name : names) {
    try {
      out.push_back(Permutation::parse(name));
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int cmd_oracle(const Config& cfg) {
  check_n(cfg.n);
  const auto taus = oracle_patterns(cfg);
  OracleOptions opts{cfg.oracle_limit, cfg.q};
  const Distribution d = brute_force_distribution(cfg.n, taus, opts);
  if (cfg.format == "json") {
    std::cout << to_truncated(d).to_json() << '\n';
  } else {
    std::cout << d.to_string() << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  check_n(cfg.n);
  auto targets = standard_targets(cfg.n, cfg.n, cfg.q, eval_options(cfg));
  if (!cfg.pattern.empty()) {
    std::string note;
    const std::string name = engine_pattern(resolve_engine(cfg.pattern, &note));
    std::erase_if(targets, [&](const VerifyTarget& t) { return t.name != name; });
  } else if (!cfg.patterns.empty()) {
    const auto names = joint_patterns(resolve_joint(cfg.patterns));
    std::erase_if(targets, [&](const VerifyTarget& t) {
      return t.name != names[0] + "+" + names[1];
    });
  }
  const VerifyReport report =
      verify_targets(targets, OracleOptions{cfg.oracle_limit, cfg.q});
  for (const auto& line : report.lines) std::cout << line << '\n';
  return report.ok() ? kOk : kMismatch;
}

int cmd_conjecture(const Config& cfg) {
  const int r = cfg.r.value_or(0);
  check_nonnegative(r, "--r");
  check_nonnegative(cfg.s, "--s");
  const int n_max = cfg.n > 0 ? cfg.n : default_conjecture_n_max(r, cfg.s);
  const FitResult fit = check_poly_times_2n(r, cfg.s, n_max, eval_options(cfg));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["r"] = r;
    j["s"] = cfg.s;
    j["n_max"] = n_max;
    switch (fit.verdict) {
      case FitResult::Verdict::fits: j["verdict"] = "fits"; break;
      case FitResult::Verdict::fails_at: j["verdict"] = "fails-at"; break;
      case FitResult::Verdict::insufficient_data: j["verdict"] = "insufficient-data"; break;
    }
    if (fit.verdict == FitResult::Verdict::fails_at) j["failing_n"] = fit.failing_n;
    j["valid_from"] = fit.valid_from;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : fit.poly_coeffs) coeffs.push_back(c.str());
    j["poly_coeffs"] = std::move(coeffs);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "r=" << r << " s=" << cfg.s << " n_max=" << n_max << ": "
              << fit.to_string() << '\n';
    if (fit.verdict == FitResult::Verdict::fits) {
      std::cout << "degree " << fit.degree() << ", coefficients (n^0 first):";
      for (const auto& c : fit.poly_coeffs) std::cout << ' ' << c;
      std::cout << '\n';
    }
  }
  switch (fit.verdict) {
    case FitResult::Verdict::fits: return kOk;
    case FitResult::Verdict::fails_at: return kMismatch;
    case FitResult::Verdict::insufficient_data: return kRefused;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-occurrence distributions over S_n via catalytic functional equations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "permfe 0.1.0");

  Config cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: bfile, json, csv, plain")
        ->envname("PERMFE_FORMAT");
    sub->add_option("--memo-limit", cfg.memo_limit,
                    "Use the serial evaluator with at most this many memo entries "
                    "(0: layered evaluator, unbounded)")
        ->envname("PERMFE_MEMO_LIMIT");
    sub->add_option("--threads", cfg.threads, "OpenMP thread count (0: runtime default)")
        ->envname("PERMFE_THREADS");
    sub->add_option("--oracle-limit", cfg.oracle_limit, "Largest n the brute-force oracle accepts")
        ->envname("PERMFE_ORACLE_LIMIT");
  };
  auto add_pattern = [&](CLI::App* sub) {
    return sub->add_option("--pattern", cfg.pattern, "Pattern in one-line notation, e.g. 132")
        ->envname("PERMFE_PATTERN");
  };
  auto add_patterns = [&](CLI::App* sub) {
    return sub->add_option("--patterns", cfg.patterns, "Pattern pair, e.g. 123,132")
        ->delimiter(',')
        ->envname("PERMFE_PATTERNS");
  };
  auto add_n = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--n,--n-max", cfg.n, help)->envname("PERMFE_N");
  };
  auto add_r = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--r", cfg.r, help)->envname("PERMFE_R");
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached sequence JSON (off by default)")
        ->envname("PERMFE_CACHE_DIR");
  };

  auto* seq = app.add_subcommand("sequence", "s_n(pattern, r) for n = 1..n-max");
  add_pattern(seq)->required();
  add_r(seq, "Exact number of occurrences")->required();
  add_n(seq, "Number of terms");
  seq->add_flag("--q", cfg.q, "Rejected here; see fullpoly");
  add_common(seq);
  add_cache(seq);

  auto* joint = app.add_subcommand("joint", "Permutations with r1 and r2 occurrences of a pattern pair");
  add_patterns(joint)->required();
  joint->add_option("--r1", cfg.r1, "Occurrences of the first pattern")->envname("PERMFE_R1");
  joint->add_option("--r2", cfg.r2, "Occurrences of the second pattern")->envname("PERMFE_R2");
  add_n(joint, "Number of terms");
  joint->add_flag("--q", cfg.q, "Rejected here; see fullpoly");
  add_common(joint);
  add_cache(joint);

  auto* full = app.add_subcommand("fullpoly", "Distribution polynomial f_n(t), or g_n(t,q) with --q");
  auto* full_pattern = add_pattern(full);
  auto* full_patterns = add_patterns(full);
  full_pattern->excludes(full_patterns);
  add_n(full, "Permutation length");
  add_r(full, "Truncate at t^r (lifts the full-mode limit)");
  full->add_flag("--q", cfg.q, "Track inversions with q")->envname("PERMFE_Q");
  full->add_option("--full-limit", cfg.full_limit, "Largest n allowed without --r")
      ->envname("PERMFE_FULL_LIMIT");
  add_common(full);

  auto* verify = app.add_subcommand("verify", "Check engines in full mode against the brute-force oracle");
  add_pattern(verify);
  add_patterns(verify);
  add_n(verify, "Check n = 1..N");
  verify->add_flag("--q", cfg.q, "Also compare inversion refinement")->envname("PERMFE_Q");
  add_common(verify);

  auto* conj = app.add_subcommand("conjecture", "Fit #{N_123 = r, N_132 = s} against p(n) 2^n");
  add_r(conj, "Occurrences of 123");
  conj->add_option("--s", cfg.s, "Occurrences of 132")->envname("PERMFE_S");
  add_n(conj, "Largest n to use (default r+s+12)");
  add_common(conj);

  auto* oracle = app.add_subcommand("oracle", "Brute-force distribution over S_n");
  add_pattern(oracle);
  add_patterns(oracle);
  add_n(oracle, "Permutation length");
  oracle->add_flag("--q", cfg.q, "Track inversions with q")->envname("PERMFE_Q");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (conj->parsed() && conj->count("--n") == 0 && !std::getenv("PERMFE_N")) cfg.n = 0;
  if (cfg.threads < 0) {
    std::cerr << "error: --threads must be >= 0\n";
    return kUsage;
  }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (seq->parsed()) return cmd_sequence(cfg);
    if (joint->parsed()) return cmd_joint(cfg);
    if (full->parsed()) return cmd_fullpoly(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (conj->parsed()) return cmd_conjecture(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const NotImplemented& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
