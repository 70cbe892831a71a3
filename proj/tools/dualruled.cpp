// dualruled: curvature reports, Smarandache curves, claim verification and
// OBJ export for ruled surfaces given as dual spherical curves.

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "dualruled.h"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kIoError = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(dr_status st) {
  switch (st) {
    case DR_OK: return kOk;
    case DR_E_IO: return kIoError;
    default: return kInvalid;
  }
}

void check(dr_status st, const std::string& what) {
  if (st != DR_OK) throw Failure{exit_for(st), what + ": " + dr_last_error()};
}

struct Config {
  std::string curve = "helicoid";
  std::vector<double> params;
  std::vector<double> s_range;
  std::size_t s_count = 0;
  std::vector<double> u_range{-1.0, 1.0};
  std::size_t u_count = 16;
  std::vector<std::string> kinds{"ET", "EG", "TG", "ETG"};
  std::string out = ".";
  double tol_re = 1e-6;
  double tol_du = 1e-5;
  std::string tol;  // "re + εdu", overrides tol-re/tol-du
};

class Curve {
 public:
  explicit Curve(const Config& cfg) {
    if (std::filesystem::exists(cfg.curve) && !std::filesystem::is_directory(cfg.curve)) {
      check(dr_curve_load(cfg.curve.c_str(), &c_), "curve " + cfg.curve);
    } else {
      check(dr_curve_preset(cfg.curve.c_str(), cfg.params.data(), cfg.params.size(), &c_), "curve " + cfg.curve);
    }
  }
  ~Curve() { dr_curve_free(c_); }
  Curve(const Curve&) = delete;
  Curve& operator=(const Curve&) = delete;
  const dr_curve* get() const { return c_; }

 private:
  dr_curve* c_ = nullptr;
};

dr_range window(const Config& cfg, const Curve& curve, std::size_t default_count) {
  dr_range r{};
  check(dr_curve_default_window(curve.get(), &r), "window");
  if (default_count) r.count = default_count;
  if (!cfg.s_range.empty()) {
    r.lo = cfg.s_range[0];
    r.hi = cfg.s_range[1];
  }
  if (cfg.s_count) r.count = cfg.s_count;
  if (!(r.hi > r.lo) || r.count < 2) throw Failure{kInvalid, "s-range must be nonempty with s-count >= 2"};
  return r;
}

dr_range ruling_range(const Config& cfg) {
  const std::vector<double>& v = cfg.u_range;
  if (!(v[1] > v[0]) || cfg.u_count < 2) throw Failure{kInvalid, "u-range must be nonempty with u-count >= 2"};
  return {v[0], v[1], cfg.u_count};
}

std::vector<dr_kind> kinds(const Config& cfg) {
  std::vector<dr_kind> out;
  for (const std::string& tok : cfg.kinds) {
    dr_kind k;
    if (dr_kind_parse(tok.c_str(), &k) != DR_OK) throw Failure{kInvalid, "kinds: " + std::string(dr_last_error())};
    out.push_back(k);
  }
  if (out.empty()) throw Failure{kInvalid, "kinds: empty"};
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string output(const Config& cfg, const std::string& file) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw Failure{kIoError, "cannot create " + cfg.out + ": " + ec.message()};
  return (std::filesystem::path(cfg.out) / file).string();
}

void resolve_tolerances(Config& cfg) {
  if (!cfg.tol.empty()) {
    double re = 0.0, du = 0.0;
    check(dr_dual_parse(cfg.tol.c_str(), &re, &du), "tol");
    cfg.tol_re = re;
    cfg.tol_du = du;
  }
  if (!(cfg.tol_re > 0.0) || !(cfg.tol_du > 0.0)) throw Failure{kInvalid, "tolerances must be positive"};
}

int cmd_analyze(const Config& cfg) {
  Curve curve(cfg);
  const dr_range w = window(cfg, curve, 0);
  const std::string path = output(cfg, "analysis.csv");
  check(dr_write_analysis(curve.get(), &w, path.c_str()), "analyze");
  std::printf("%s\n", path.c_str());
  return kOk;
}

int cmd_smarandache(const Config& cfg) {
  Curve curve(cfg);
  const dr_range w = window(cfg, curve, 0);
  for (dr_kind k : kinds(cfg)) {
    const std::string name = lower(dr_kind_name(k));
    const std::string report = output(cfg, "smarandache_" + name + ".csv");
    const std::string derived = output(cfg, "curve_" + name + ".csv");
    check(dr_write_smarandache(curve.get(), k, &w, report.c_str(), derived.c_str()),
          std::string("smarandache ") + dr_kind_name(k));
    std::printf("%s\n%s\n", report.c_str(), derived.c_str());
  }
  return kOk;
}

int cmd_verify(Config cfg) {
  resolve_tolerances(cfg);
  Curve curve(cfg);
  const dr_range w = window(cfg, curve, 0);
  dr_ledger* ledger = nullptr;
  check(dr_verify(curve.get(), &w, cfg.tol_re, cfg.tol_du, &ledger), "verify");
  std::unique_ptr<dr_ledger, void (*)(dr_ledger*)> hold(ledger, dr_ledger_free);
  const std::string path = output(cfg, "ledger.tsv");
  check(dr_ledger_write(ledger, path.c_str()), "ledger");
  std::size_t failed = 0;
  const std::size_t n = dr_ledger_size(ledger);
  for (std::size_t i = 0; i < n; ++i) {
    dr_ledger_row row{};
    check(dr_ledger_row_at(ledger, i, &row), "ledger");
    if (!row.passed) {
      ++failed;
      std::printf("FAIL %s  re=%.3e du=%.3e\n", row.claim_id, row.max_re, row.max_du);
    }
  }
  std::printf("%s: %zu claims, %zu must-verify failures, ledger %s\n", dr_curve_name(curve.get()), n,
              failed, path.c_str());
  return dr_ledger_passed(ledger) ? kOk : kVerifyFailed;
}

int cmd_mesh(const Config& cfg) {
  Curve curve(cfg);
  const dr_range s = window(cfg, curve, 64);
  const dr_range u = ruling_range(cfg);
  std::vector<dr_kind> list{DR_KIND_BASE};
  for (dr_kind k : kinds(cfg)) list.push_back(k);
  for (dr_kind k : list) {
    const std::string path = output(cfg, lower(dr_kind_name(k)) + ".obj");
    check(dr_write_mesh(curve.get(), k, &s, &u, path.c_str()), std::string("mesh ") + dr_kind_name(k));
    std::printf("%s\n", path.c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual spherical curves, Smarandache ruled surfaces and claim verification"};
  app.set_config("--config", "", "key = value file; command-line options override it");
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--curve", cfg.curve, "Preset name or sampled-curve file")->capture_default_str();
  app.add_option("--params", cfg.params, "Preset parameters, comma separated")->delimiter(',');
  app.add_option("--s-range", cfg.s_range, "Analysis window lo,hi in arc length")->delimiter(',')->expected(2);
  app.add_option("--s-count", cfg.s_count, "Samples over the window");
  app.add_option("--u-range", cfg.u_range, "Ruling parameter lo,hi for meshes")
      ->delimiter(',')
      ->expected(2)
      ->capture_default_str();
  app.add_option("--u-count", cfg.u_count, "Rulings samples for meshes")->capture_default_str();
  app.add_option("--kinds", cfg.kinds, "Subset of ET,EG,TG,ETG")->delimiter(',')->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory")->capture_default_str();
  app.add_option("--tol-re", cfg.tol_re, "Real-part tolerance")->capture_default_str();
  app.add_option("--tol-du", cfg.tol_du, "Dual-part tolerance")->capture_default_str();
  std::vector<std::string> tol_words;
  app.add_option("--tol", tol_words, "Both tolerances as \"re + εdu\"")->expected(1, 3);

  auto* analyze = app.add_subcommand("analyze", "Curvature table along the curve")->fallthrough();
  auto* smarandache = app.add_subcommand("smarandache", "Reports and samples of derived curves")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Check every published claim, write the ledger")->fallthrough();
  auto* mesh = app.add_subcommand("mesh", "OBJ meshes of the base and derived surfaces")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  for (const std::string& w : tol_words) cfg.tol += (cfg.tol.empty() ? "" : " ") + w;

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (smarandache->parsed()) return cmd_smarandache(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (mesh->parsed()) return cmd_mesh(cfg);
  } catch (const Failure& f) {
    std::fprintf(stderr, "dualruled: %s\n", f.message.c_str());
    return f.code;
  }
  return kInvalid;
}
