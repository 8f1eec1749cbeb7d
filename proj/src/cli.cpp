#include "nashcert/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nashcert/certificates.hpp"
#include "nashcert/document.hpp"
#include "nashcert/elimination.hpp"
#include "nashcert/error.hpp"
#include "nashcert/lab.hpp"
#include "nashcert/poly_text.hpp"

namespace nashcert::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string load_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + arg.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return trim(ss.str());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

std::vector<GaussianRational> parse_tuple(const std::string& s) {
  std::vector<GaussianRational> out;
  for (const auto& item : split_list(s)) out.push_back(parse_gaussian(item));
  return out;
}

std::complex<double> parse_complex(const std::string& s) {
  try {
    return parse_gaussian(s).to_complex();
  } catch (const ParseError&) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw;
    return {v, 0.0};
  }
}

std::string format_double(double v) {
  std::ostringstream ss;
  ss << std::setprecision(3) << std::scientific << v;
  return ss.str();
}

int max_index_of(const MultiPoly& p) { return p.space().n(); }

MultiPoly place(const MultiPoly& p, const VarSpace& target, const char* what) {
  try {
    return reembed(p, target);
  } catch (const Error& e) {
    throw Error(ErrorCode::IncompatiblePart,
                std::string(what) + " must only use " + target.describe() + " (" + e.what() + ")");
  }
}

int exit_code_for(ErrorCode code) { return code == ErrorCode::Syntax ? kUsage : kInvalidMath; }

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int run() {
    inputs_ = Json::object();
    int code = kSuccess;
    try {
      validate();
      if (cfg_.command == "split") code = split();
      else if (cfg_.command == "lift") code = lift();
      else if (cfg_.command == "merge") code = merge();
      else if (cfg_.command == "resultant") code = resultant();
      else if (cfg_.command == "verify") code = verify();
      else throw UsageError("unknown command '" + cfg_.command + "'");
    } catch (const UsageError& e) {
      return fail(kUsage, "usage", e.what());
    } catch (const Error& e) {
      return fail(exit_code_for(e.code()), std::string(to_string(e.code())), e.what());
    }
    emit(code);
    return code;
  }

 private:
  void validate() const {
    if (!(cfg_.tol > 0.0)) throw UsageError("--tol must be positive");
    if (cfg_.count < 1) throw UsageError("--count must be at least 1");
    if (!(cfg_.radius > 0.0)) throw UsageError("--radius must be positive");
    if (cfg_.delta && !(*cfg_.delta >= 0.0)) throw UsageError("--delta must be non-negative");
  }

  // --- commands ------------------------------------------------------------

  int split() {
    const std::string text = load_text(cfg_.annihilator);
    inputs_["annihilator"] = text;
    const MultiPoly raw = parse_poly(text);
    const int n = std::max(max_index_of(raw), expr_dims());
    const auto input = make_certificate(place(raw, VarSpace::complex(n), "annihilator of f"), FunctionPart::F);
    SplitResult r = split_complex(input);
    certs_.push_back({"Re f", std::move(r.real_part)});
    certs_.push_back({"Im f", std::move(r.imag_part)});
    return maybe_verify(false);
  }

  int lift() {
    const std::string text = load_text(cfg_.real_annihilator);
    inputs_["real_annihilator"] = text;
    inputs_["base"] = cfg_.base;
    inputs_["value"] = cfg_.value;
    const BaseData base{parse_tuple(cfg_.base), parse_gaussian(trim(cfg_.value))};
    const MultiPoly raw = parse_poly(text);
    const int n = std::max({max_index_of(raw), static_cast<int>(base.z0.size()), expr_dims()});
    const auto input = make_certificate(place(raw, VarSpace::real(n), "annihilator of Re f"), FunctionPart::RealPart);
    if (n > 1 && !cfg_.expr) throw UsageError("lift with n > 1 requires --verify EXPR");
    certs_.push_back({"f", cartan_lift(input, base)});
    return maybe_verify(false);
  }

  int merge() {
    const std::string t1 = load_text(cfg_.p1);
    const std::string t2 = load_text(cfg_.p2);
    inputs_["p1"] = t1;
    inputs_["p2"] = t2;
    std::optional<std::vector<GaussianRational>> slice;
    if (cfg_.slice) {
      inputs_["slice"] = *cfg_.slice;
      slice = parse_tuple(*cfg_.slice);
    }
    const MultiPoly r1 = parse_poly(t1);
    const MultiPoly r2 = parse_poly(t2);
    const int n = std::max({max_index_of(r1), max_index_of(r2), expr_dims(),
                            slice ? static_cast<int>(slice->size()) : 1});
    const VarSpace real = VarSpace::real(n);
    const auto a = make_certificate(place(r1, real, "annihilator of Re f"), FunctionPart::RealPart);
    const auto b = make_certificate(place(r2, real, "annihilator of Im f"), FunctionPart::ImagPart);
    certs_.push_back({"f", merge_real_pair(a, b, slice)});
    return maybe_verify(false);
  }

  int resultant() {
    const std::string tp = load_text(cfg_.p);
    const std::string tq = load_text(cfg_.q);
    inputs_["p"] = tp;
    inputs_["q"] = tq;
    inputs_["var"] = cfg_.var;
    const auto v = parse_var(cfg_.var);
    if (!v) throw UsageError("--var must name a variable (t, w, x1, zb2, ...)");
    const MultiPoly p = parse_poly(tp);
    const MultiPoly q = parse_poly(tq);
    std::set<Family> families;
    for (const auto* m : {&p, &q}) {
      for (Family f : m->space().spatial_families()) families.insert(f);
    }
    if (v->is_spatial()) families.insert(v->family);
    const int n = std::max({p.space().n(), q.space().n(), v->is_spatial() ? v->index : 1});
    const bool has_w = p.space().has_w() || q.space().has_w() || v->family == Family::W;
    const VarSpace space(n, {families.begin(), families.end()}, has_w);
    EliminationResult er = resultant_wrt(reembed(p, space), reembed(q, space), *v);
    resultant_ = Json{{"polynomial", render_poly(er.resultant)}, {"reduced", er.reduced}, {"steps", er.steps}};
    if (cfg_.mode == OutputMode::Human) {
      out_ << render_poly(er.resultant) << '\n';
      if (er.reduced) out_ << "  (common factor removed before the resultant was nonzero)\n";
      if (cfg_.explain) {
        for (const auto& s : er.steps) out_ << "  | " << s << '\n';
      }
    }
    return kSuccess;
  }

  int verify() {
    const std::string text = load_text(cfg_.poly);
    inputs_["poly"] = text;
    inputs_["part"] = cfg_.part;
    if (!cfg_.expr) throw UsageError("verify requires --expr");
    const FunctionPart part = parse_function_part(cfg_.part);
    const MultiPoly raw = parse_poly(text);
    const int n = std::max(max_index_of(raw), expr_dims());
    const VarSpace space = part == FunctionPart::F ? VarSpace::complex(n) : VarSpace::real(n);
    certs_.push_back({std::string(to_string(part)), make_certificate(place(raw, space, "certificate"), part)});
    return maybe_verify(true);
  }

  // --- verification ----------------------------------------------------------

  int expr_dims() {
    if (!cfg_.expr) return 1;
    if (!expr_) expr_ = parse_expr(*cfg_.expr);
    return std::max(1, expr_->max_var_index());
  }

  int maybe_verify(bool required) {
    if (!cfg_.expr) {
      if (required) throw UsageError("no expression to verify against");
      return kSuccess;
    }
    expr_dims();
    inputs_["verify"] = *cfg_.expr;
    bool all_pass = true;
    for (auto& [label, cert] : certs_) {
      const int n = cert.space().n();
      SampleRegion region = SampleRegion::polydisc(center(n), cfg_.radius);
      if (cfg_.delta) region.delta = *cfg_.delta;
      cert.verification = verify_certificate(cert, *expr_, region, cfg_.count, cfg_.tol, cfg_.seed);
      all_pass = all_pass && cert.verification->pass;
    }
    Json region{{"center", cfg_.center.value_or("0")}, {"radius", cfg_.radius}};
    if (cfg_.delta) region["delta"] = *cfg_.delta;
    inputs_["region"] = std::move(region);
    inputs_["count"] = cfg_.count;
    inputs_["tol"] = cfg_.tol;
    inputs_["seed"] = cfg_.seed;
    return all_pass ? kSuccess : kVerificationFailed;
  }

  std::vector<std::complex<double>> center(int n) const {
    std::vector<std::complex<double>> c;
    if (cfg_.center) {
      for (const auto& item : split_list(*cfg_.center)) c.push_back(parse_complex(item));
    }
    if (c.empty()) c.push_back(0.0);
    if (c.size() == 1 && n > 1) c.assign(static_cast<std::size_t>(n), c.front());
    if (c.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::DimensionMismatch, "--center has " + std::to_string(c.size()) +
                                                    " coordinates, expected " + std::to_string(n));
    }
    return c;
  }

  // --- output ----------------------------------------------------------------

  void emit(int code) {
    if (cfg_.mode == OutputMode::Machine) {
      Json doc = base_document(code);
      out_ << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [label, cert] : certs_) {
      out_ << label << ": " << render_poly(cert.poly) << '\n';
      if (!cert.flags.empty()) {
        out_ << "  flags:";
        for (CertFlag f : cert.flags) out_ << ' ' << to_string(f);
        out_ << '\n';
      }
      if (cert.verification) {
        const auto& r = *cert.verification;
        out_ << "  verification: " << (r.pass ? "pass" : "FAIL") << " (" << r.points_checked
             << " points, max relative residual " << format_double(r.max_relative_residual) << ", tol "
             << format_double(r.tol) << ")\n";
      }
      if (cfg_.explain) {
        for (const auto& s : cert.derivation) out_ << "  | " << s << '\n';
      }
    }
    if (code == kVerificationFailed) err_ << "verification failed\n";
  }

  Json base_document(int code) const {
    Json certificates = Json::array();
    Json reports = Json::array();
    for (std::size_t k = 0; k < certs_.size(); ++k) {
      Json c = certificate_to_json(certs_[k].second);
      c["label"] = certs_[k].first;
      certificates.push_back(std::move(c));
      if (certs_[k].second.verification) {
        Json r = report_to_json(*certs_[k].second.verification);
        r["certificate"] = k;
        reports.push_back(std::move(r));
      }
    }
    Json doc{{"command", cfg_.command}, {"inputs", inputs_}, {"certificates", std::move(certificates)},
             {"reports", std::move(reports)}};
    if (resultant_) doc["resultant"] = *resultant_;
    doc["exit"] = code;
    return doc;
  }

  int fail(int code, const std::string& kind, const std::string& message) {
    err_ << "error (" << kind << "): " << message << '\n';
    if (cfg_.mode == OutputMode::Machine) {
      Json doc = base_document(code);
      doc["error"] = Json{{"kind", kind}, {"message", message}};
      out_ << doc.dump(2) << '\n';
    }
    return code;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  Json inputs_;
  std::vector<std::pair<std::string, AnnihilatorCertificate>> certs_;
  std::optional<ExprAST> expr_;
  std::optional<Json> resultant_;
};

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format, bool verify_flag) {
  if (verify_flag) {
    sub->add_option("--verify", cfg.expr, "Expression for f to check the certificates against");
  }
  sub->add_option("--center", cfg.center, "Sample polydisc center, comma-separated (default 0)");
  sub->add_option("--radius", cfg.radius, "Sample polydisc radius")->capture_default_str();
  sub->add_option("--delta", cfg.delta, "Guard margin for poles and branch cuts (default 1e-3 * radius)");
  sub->add_option("--count", cfg.count, "Number of sample points")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "Maximum relative residual")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
  sub->add_option("--format", format, "Output mode")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
  sub->add_flag("--explain", cfg.explain, "Print derivation logs in human mode");
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Session(config, out, err).run();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "human";
  CLI::App app{"Annihilating-polynomial certificates for holomorphic functions and their real and imaginary parts"};
  app.name(args.empty() ? "nashcert" : args.front());
  app.require_subcommand(1);

  auto* split = app.add_subcommand("split", "Complex annihilator of f -> annihilators of Re f and Im f");
  split->add_option("--annihilator", cfg.annihilator, "Polynomial P(z, t) with P(z, f(z)) = 0")->required();
  add_common(split, cfg, format, true);

  auto* lift = app.add_subcommand("lift", "Annihilator of Re f plus base data -> annihilator of f");
  lift->add_option("--real-annihilator", cfg.real_annihilator, "Polynomial A(x, y, t) with A(x, y, Re f) = 0")->required();
  lift->add_option("--base", cfg.base, "Base point z0, comma-separated")->required();
  lift->add_option("--value", cfg.value, "Exact value f(z0)")->required();
  add_common(lift, cfg, format, true);

  auto* merge = app.add_subcommand("merge", "Annihilators of Re f and Im f -> candidate annihilator of f");
  merge->add_option("--p1", cfg.p1, "Annihilator of Re f")->required();
  merge->add_option("--p2", cfg.p2, "Annihilator of Im f")->required();
  merge->add_option("--slice", cfg.slice, "Slice y = y0, comma-separated rationals");
  add_common(merge, cfg, format, true);

  auto* res = app.add_subcommand("resultant", "Resultant of two polynomials in one variable");
  res->add_option("--p", cfg.p, "First polynomial")->required();
  res->add_option("--q", cfg.q, "Second polynomial")->required();
  res->add_option("--var", cfg.var, "Variable to eliminate")->capture_default_str();
  add_common(res, cfg, format, false);

  auto* ver = app.add_subcommand("verify", "Numerically check an annihilator against an expression");
  ver->add_option("--poly", cfg.poly, "Annihilator polynomial")->required();
  ver->add_option("--part", cfg.part, "Which part it annihilates")->check(CLI::IsMember({"f", "re", "im"}))->capture_default_str();
  ver->add_option("--expr", cfg.expr, "Expression for f")->required();
  add_common(ver, cfg, format, false);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("nashcert");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  for (auto* sub : {split, lift, merge, res, ver}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }
  cfg.mode = format == "machine" ? OutputMode::Machine : OutputMode::Human;
  return execute(cfg, out, err);
}

}  // namespace nashcert::cli
