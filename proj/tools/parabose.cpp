// parabose: batch front end for normal forms, axiom suites and the matrix oracle.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input or
// configuration, 3 letter outside the context, 4 Fock space too large.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "parabose/bosonization.hpp"
#include "parabose/parse.hpp"
#include "parabose/representations.hpp"
#include "parabose/super_hopf.hpp"

namespace {

using namespace parabose;
using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kForeign = 3, kTooLarge = 4 };

struct Output {
  std::string format = "text";
  std::string path;
};

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw std::runtime_error("cannot write " + out.path);
  f << text;
}

ordered_json summary(const Report& r) {
  return {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skip", r.count(Status::Skip)}};
}

std::string render_json(const std::string& command, const ordered_json& config, const Report& report) {
  ordered_json doc = ordered_json::array();
  doc.push_back({{"tool", "parabose"}, {"version", kVersion}, {"command", command}, {"config", config},
                 {"summary", summary(report)}});
  for (auto& e : report.to_json()) doc.push_back(std::move(e));
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::vector<std::string> order;
  std::map<std::string, std::array<std::size_t, 3>> counts;
  for (const auto& e : report.entries()) {
    const std::string key = (e.context.empty() ? "" : e.context + " ") + e.axiom;
    if (!counts.count(key)) order.push_back(key);
    counts[key][static_cast<int>(e.status)]++;
  }
  std::ostringstream os;
  for (const auto& key : order) {
    const auto& c = counts[key];
    os << key << ": " << c[0] << " passed";
    if (c[1]) os << ", " << c[1] << " FAILED";
    if (c[2]) os << ", " << c[2] << " skipped";
    os << "\n";
  }
  for (const auto& e : report.entries())
    if (e.status == Status::Fail)
      os << "FAIL " << e.context << " " << e.axiom << " [" << e.word << "]\n  lhs: " << e.lhs << "\n  rhs: " << e.rhs
         << "\n";
  os << "total: " << report.count(Status::Pass) << " passed, " << report.failures() << " failed, "
     << report.count(Status::Skip) << " skipped\n";
  return os.str();
}

int finish(const Output& out, const std::string& command, const ordered_json& config, const Report& report,
           const std::string& note = {}) {
  if (out.format == "json")
    emit(out, render_json(command, config, report));
  else
    emit(out, render_text(report) + note);
  return report.all_passed() ? kOk : kCheckFailed;
}

ContextKind require_context(const std::string& name) {
  auto kind = parse_context_kind(name);
  if (!kind) throw CLI::ValidationError("--ctx", "unknown context " + name);
  return *kind;
}

int cmd_nf(const std::string& ctx_name, const std::string& expr) {
  const ContextKind kind = require_context(ctx_name);
  const Element a = parse_element(expr);
  std::cout << normal_form(a, shared_context(kind)).str() << "\n";
  return kOk;
}

struct VerifyOptions {
  std::string ctx = "pb";
  std::size_t max_len = 4;
  std::uint32_t max_index = 2;
  bool quasitriangular = false;
  Output out;
};

int cmd_verify(const VerifyOptions& o) {
  const ContextKind kind = require_context(o.ctx);
  if (kind != ContextKind::Paraboson && kind != ContextKind::ParabosonG && kind != ContextKind::ParabosonK)
    throw CLI::ValidationError("--ctx", "verify supports pb, pbg and pbk");
  if (o.quasitriangular && kind != ContextKind::ParabosonG)
    throw CLI::ValidationError("--quasitriangular", "only meaningful for pbg");
  if (o.max_len < 1 || o.max_index < 1) throw CLI::ValidationError("--max-len/--max-index", "must be positive");

  Report report;
  if (kind == ContextKind::Paraboson) {
    report = check_super_hopf_axioms(o.max_len, o.max_index);
  } else {
    report = check_ordinary_hopf_axioms(kind, o.max_len, o.max_index);
    if (kind == ContextKind::ParabosonG) {
      report.append(bosonise_from_general(std::min<std::size_t>(o.max_len, 3), o.max_index));
      if (o.quasitriangular) report.append(check_quasitriangularity_g(std::min<std::size_t>(o.max_len, 3), o.max_index));
    }
  }
  const ordered_json config = {{"ctx", o.ctx},
                               {"max_len", o.max_len},
                               {"max_index", o.max_index},
                               {"quasitriangular", o.quasitriangular}};
  return finish(o.out, "verify", config, report);
}

struct OracleOptions {
  OracleConfig config;
  Output out;
};

int cmd_oracle(const OracleOptions& o) {
  o.config.spec.validate();
  const std::size_t cap = default_dimension_cap();
  const Report report = run_oracle_suite(o.config, cap);
  const auto& s = o.config.spec;
  const ordered_json config = {{"n", s.n},
                               {"p", s.p},
                               {"cutoff", s.cutoff},
                               {"dimension", s.dimension()},
                               {"seed", o.config.seed},
                               {"casimir_mmax", o.config.casimir_mmax},
                               {"samples", o.config.samples},
                               {"max_len", o.config.max_len}};
  std::string note;
  if (s.p == 1)
    note = report.select("boson_degeneration").empty() ? ""
           : "p = 1: the representation satisfies the boson commutation relations\n";
  return finish(o.out, "oracle", config, report, note);
}

struct MatrixOptions {
  FockSpec spec;
  std::string expr;
  bool guarded = false;
  std::string path;
};

int cmd_matrix(const MatrixOptions& o) {
  o.spec.validate();
  const MatrixRep rep = build_green_ansatz(o.spec);
  const Element a = parse_element(o.expr);
  const SparseMatrix m = o.guarded ? represent(a, rep) : represent_unguarded(a, rep);
  ordered_json doc = {{"tool", "parabose"},
                      {"version", kVersion},
                      {"n", o.spec.n},
                      {"p", o.spec.p},
                      {"cutoff", o.spec.cutoff},
                      {"expr", a.str()},
                      {"guarded", o.guarded}};
  if (o.guarded) doc["columns"] = rep.guarded_states(weighted_length(a));
  doc["matrix"] = matrix_to_json(m);
  emit(Output{"json", o.path}, doc.dump() + "\n");
  return kOk;
}

void add_output(CLI::App* sub, Output& out) {
  sub->add_option("--output", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", out.path, "write the report to this file instead of stdout");
}

void add_fock(CLI::App* sub, FockSpec& spec) {
  sub->add_option("--n", spec.n, "number of modes");
  sub->add_option("--p", spec.p, "parastatistics order");
  sub->add_option("--cutoff", spec.cutoff, "per-component occupancy bound");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, Hopf axiom suites and matrix checks for paraboson algebras"};
  app.set_version_flag("--version", std::string("parabose ") + kVersion);
  app.require_subcommand(1);

  std::string nf_ctx = "pb", nf_expr;
  auto* nf = app.add_subcommand("nf", "print the normal form of an expression");
  nf->add_option("--ctx", nf_ctx, "free, boson, pb, pbg or pbk");
  nf->add_option("expr", nf_expr, "expression, e.g. \"B-1 B+1\"")->required();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the Hopf axiom suite of a context");
  verify->add_option("--ctx", verify_opts.ctx, "pb, pbg or pbk");
  verify->add_option("--max-len", verify_opts.max_len, "longest word checked");
  verify->add_option("--max-index", verify_opts.max_index, "largest mode index");
  verify->add_flag("--quasitriangular", verify_opts.quasitriangular, "also check the R-matrix (pbg)");
  add_output(verify, verify_opts.out);

  OracleOptions oracle_opts;
  oracle_opts.config.spec = FockSpec{1, 2, 6};
  auto* oracle = app.add_subcommand("oracle", "compare symbolic results with Fock-space matrices");
  add_fock(oracle, oracle_opts.config.spec);
  oracle->add_option("--seed", oracle_opts.config.seed, "seed for the random words");
  oracle->add_option("--casimir-mmax", oracle_opts.config.casimir_mmax, "largest power of N");
  oracle->add_option("--samples", oracle_opts.config.samples, "random words per context");
  oracle->add_option("--max-len", oracle_opts.config.max_len, "longest random word");
  add_output(oracle, oracle_opts.out);

  MatrixOptions matrix_opts;
  matrix_opts.spec = FockSpec{1, 2, 6};
  auto* matrix = app.add_subcommand("matrix", "export the matrix of an expression as JSON");
  add_fock(matrix, matrix_opts.spec);
  matrix->add_flag("--guarded", matrix_opts.guarded, "keep only columns free of truncation effects");
  matrix->add_option("--out", matrix_opts.path, "write to this file instead of stdout");
  matrix->add_option("expr", matrix_opts.expr, "expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*nf) return cmd_nf(nf_ctx, nf_expr);
    if (*verify) return cmd_verify(verify_opts);
    if (*oracle) return cmd_oracle(oracle_opts);
    if (*matrix) return cmd_matrix(matrix_opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ForeignLetter& e) {
    std::cerr << e.what() << "\n";
    return kForeign;
  } catch (const UnrepresentableLetter& e) {
    std::cerr << e.what() << "\n";
    return kForeign;
  } catch (const DimensionOverflow& e) {
    std::cerr << e.what() << "\n";
    return kTooLarge;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
