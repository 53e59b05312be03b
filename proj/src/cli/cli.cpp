// Copyright 2026 The mfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mfkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mfkit/bott.hpp"
#include "mfkit/document.hpp"
#include "mfkit/kernels.hpp"
#include "mfkit/mf.hpp"
#include "mfkit/orlov.hpp"
#include "mfkit/random.hpp"
#include "mfkit/report.hpp"
#include "mfkit/sweep.hpp"

namespace mfkit {

namespace {

const char* kModule = "cli";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string output;
  std::uint64_t seed = 1;

  int n = 0, d = 0, p = 0, q = 0, l = 0, r = 0, t = 0, j = 0, m = 0, by = 0;
  std::optional<int> n_opt, d_opt;
  Count value = 0;
  int pairs = 1, half_degree = 1;
  bool solo = false;
  bool normalize = false;
  std::string field = "Qi";
  std::uint64_t prime = 0;
  std::string file, file2;
  int cases = 100;
  int n_max = 0, d_max = 0;
  int threads = 0;
};

Json degrees_json(const DegreeMultiset& d) { return std::vector<int>(d.begin(), d.end()); }

Json betti_cells(const BettiTable& b) {
  Json cells = Json::object();
  for (const auto& [key, count] : b.entries())
    cells["b^" + std::to_string(key.first) + "_" + std::to_string(key.second)] = count;
  return cells;
}

Json table_cells(const CohomologyTable& t) {
  Json cells = Json::object();
  for (const auto& [key, count] : t.entries())
    cells["T[" + std::to_string(key.first) + "][" + std::to_string(key.second) + "]"] = count;
  return cells;
}

std::string phi0_text(const Phi0Descriptor& phi) {
  if (phi.zero) return "0";
  return "i^*(wedge^" + std::to_string(phi.exterior_power) + " T)(" + std::to_string(phi.twist) + ")[" +
         std::to_string(phi.shift) + "]";
}

std::string shamash_text(const std::vector<DegreeCount>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [degree, mult] : terms) {
    if (!out.empty()) out += " + ";
    out += "R(" + std::to_string(-degree) + ")";
    if (mult != 1) out += "^" + std::to_string(mult);
  }
  return out;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  using Action = std::function<void()>;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description, Action action) {
    CLI::App* sub = parent->add_subcommand(name, description);
    actions_.emplace_back(sub, std::move(action));
    return sub;
  }
  void add_n(CLI::App* sub) { sub->add_option("--n", o_.n, "ambient dimension n")->required(); }
  void add_d(CLI::App* sub) { sub->add_option("--d", o_.d, "hypersurface degree d")->required(); }
  void add_file(CLI::App* sub, const char* what = "factorization document") {
    sub->add_option("file", o_.file, what)->required();
  }
  void add_context_overrides(CLI::App* sub) {
    sub->add_option("--n", o_.n_opt, "ambient dimension (default: nvars - 1)");
    sub->add_option("--d", o_.d_opt, "hypersurface degree (default: deg f)");
  }

  void build(CLI::App& app);

  // Output helpers.
  void emit(const Report& report) { out_ << (o_.json ? dump_json(report.to_json()) : report.to_text()); }
  void emit_document(const Json& doc, Report& report);
  void set_context(Report& report, const HypersurfaceContext& ctx) {
    report.set_context(ctx);
    report.add_unchecked_hypotheses();
  }

  MatrixFactorization load_mf(const std::string& path, Report& report, const char* input = "document");
  std::optional<HypersurfaceContext> context_for(const MatrixFactorization& F) const;
  HypersurfaceContext require_context(const MatrixFactorization& F) const;
  void add_mf_results(Report& report, const MatrixFactorization& F);
  void emit_mf(const MatrixFactorization& F, Report& report);

  // Commands.
  void mf_validate_cmd();
  void mf_unary(const std::string& op, const std::function<MatrixFactorization(const MatrixFactorization&, Report&)>& f);
  void mf_tensor_cmd();
  void mf_fermat_cmd();
  void mf_betti_cmd();
  void mf_fuzz_cmd();
  void rho_from_mf_cmd();
  void orlov_translate_cmd();
  void check_bgs_cmd();
  void sweep_cmd();

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  std::vector<std::pair<CLI::App*, Action>> actions_;
};

void Cli::emit_document(const Json& doc, Report& report) {
  if (!o_.output.empty()) {
    write_text_file(o_.output, dump_json(doc));
    report.add_result("written", o_.output);
    emit(report);
  } else if (o_.json) {
    report.add_result("document", doc);
    emit(report);
  } else {
    out_ << dump_json(doc);
  }
}

MatrixFactorization Cli::load_mf(const std::string& path, Report& report, const char* input) {
  const Json j = read_json_file(path);
  report.add_input(input, j.dump());
  return mf_make(mf_candidate_from_json(j));
}

std::optional<HypersurfaceContext> Cli::context_for(const MatrixFactorization& F) const {
  const int n = o_.n_opt.value_or(static_cast<int>(F.nvars()) - 1);
  const int d = o_.d_opt.value_or(F.degree());
  if (n < 1) return std::nullopt;
  return HypersurfaceContext(n, d);
}

HypersurfaceContext Cli::require_context(const MatrixFactorization& F) const {
  auto ctx = context_for(F);
  if (!ctx) throw DomainError(kModule, "a single-variable f has no hypersurface context; pass --n");
  return *ctx;
}

void Cli::add_mf_results(Report& report, const MatrixFactorization& F) {
  report.add_result("field", F.field().name());
  report.add_result("nvars", F.nvars());
  report.add_result("f", F.f().to_string());
  report.add_result("rank", F.rank());
  report.add_result("F0_degrees", degrees_json(F.f0()));
  report.add_result("F1_degrees", degrees_json(F.f1()));
  report.add_result("reduced", mf_is_reduced(F));
}

void Cli::emit_mf(const MatrixFactorization& F, Report& report) {
  if (auto ctx = context_for(F)) set_context(report, *ctx);
  add_mf_results(report, F);
  emit_document(mf_to_json(F), report);
}

void Cli::mf_validate_cmd() {
  Report report("mf validate");
  const MatrixFactorization F = load_mf(o_.file, report);
  if (auto ctx = context_for(F)) set_context(report, *ctx);
  add_mf_results(report, F);
  report.add_verdict("valid", "pass", Json::object());
  emit(report);
}

void Cli::mf_unary(const std::string& op,
                   const std::function<MatrixFactorization(const MatrixFactorization&, Report&)>& f) {
  Report report(op);
  const MatrixFactorization F = load_mf(o_.file, report);
  const MatrixFactorization G = f(F, report);
  emit_mf(G, report);
}

void Cli::mf_tensor_cmd() {
  Report report("mf tensor");
  const MatrixFactorization F = load_mf(o_.file, report, "first");
  const MatrixFactorization G = load_mf(o_.file2, report, "second");
  report.add_input("normalize", o_.normalize ? "yes" : "no");
  emit_mf(mf_tensor(F, G, o_.normalize ? Normalize::Yes : Normalize::No), report);
}

void Cli::mf_fermat_cmd() {
  Report report("mf fermat");
  const Field field = field_from_name(o_.field, o_.prime);
  report.add_input("field", field.name());
  report.add_input("pairs", std::to_string(o_.pairs));
  report.add_input("half_degree", std::to_string(o_.half_degree));
  report.add_input("solo", o_.solo ? "yes" : "no");
  emit_mf(mf_fermat(field, o_.pairs, o_.half_degree, o_.solo), report);
}

void Cli::mf_betti_cmd() {
  Report report("mf betti");
  const MatrixFactorization F = load_mf(o_.file, report);
  if (!mf_is_reduced(F))
    throw DomainError(kModule, "Betti numbers need a reduced factorization; run `mf reduce` first");
  if (auto ctx = context_for(F)) set_context(report, *ctx);
  const BettiTable b = mf_betti(F);
  report.add_result("betti", betti_cells(b));
  report.add_result("total", b.total());
  if (!o_.output.empty()) {
    emit_document(betti_to_json(b), report);
  } else {
    emit(report);
  }
}

void Cli::mf_fuzz_cmd() {
  Report report("mf fuzz");
  const Field field = field_from_name(o_.field, o_.prime);
  if (o_.cases < 1) throw DomainError(kModule, "--cases must be positive");
  report.add_input("field", field.name());
  report.add_input("cases", std::to_string(o_.cases));
  report.add_input("seed", std::to_string(o_.seed));
  fuzz::Rng rng(o_.seed);
  int shift_fail = 0, reduce_fail = 0, dual_fail = 0, betti_fail = 0;
  for (int k = 0; k < o_.cases; ++k) {
    const MatrixFactorization F = fuzz::random_factorization(field, rng);
    if (mf_shift(mf_shift(F)) != mf_twist(F, F.degree())) ++shift_fail;
    const ReduceResult red = mf_reduce_counted(F);
    if (!mf_check(red.value).empty() || !mf_is_reduced(red.value) || mf_reduce(red.value) != red.value ||
        red.value.rank() + red.splits != F.rank())
      ++reduce_fail;
    const MatrixFactorization D = mf_dual(F);
    if (!mf_check(D).empty() || !presentation_equivalent(mf_dual(D), mf_normalize(F))) ++dual_fail;
    if (mf_betti(red.value).total() != 2 * red.value.rank()) ++betti_fail;
  }
  report.add_result("cases", o_.cases);
  auto verdict = [&](const char* name, int failures) {
    report.add_verdict(name, failures == 0 ? "pass" : "fail", Json{{"failures", failures}});
  };
  verdict("shift o shift = twist by d", shift_fail);
  verdict("reduce is reduced, idempotent, rank-accounted", reduce_fail);
  verdict("dual validates and dual o dual = normalize", dual_fail);
  verdict("betti total = 2 rank", betti_fail);
  emit(report);
}

void Cli::rho_from_mf_cmd() {
  Report report("rho from-mf");
  const MatrixFactorization F = load_mf(o_.file, report);
  if (!mf_is_reduced(F)) throw DomainError(kModule, "rho needs a reduced factorization; run `mf reduce` first");
  const HypersurfaceContext ctx = require_context(F);
  set_context(report, ctx);
  report.add_result("rho", rho_of_mf(F));
  if (ctx.a() <= 0) {
    const CohomologyTable t = betti_to_table(ctx, mf_betti(F));
    report.add_result("table", table_cells(t));
    report.add_result("table_total", t.total());
    for (const auto& d : t.diagnostics()) report.add_diagnostic(d);
  }
  emit(report);
}

void Cli::orlov_translate_cmd() {
  Report report("orlov translate");
  const Json j = read_json_file(o_.file);
  report.add_input("document", j.dump());
  BettiTable b;
  std::optional<HypersurfaceContext> ctx;
  if (j.is_object() && j.contains("s0")) {
    const MatrixFactorization F = mf_make(mf_candidate_from_json(j));
    if (!mf_is_reduced(F)) throw DomainError(kModule, "translation needs a reduced factorization; run `mf reduce` first");
    b = mf_betti(F);
    ctx = require_context(F);
  } else {
    b = betti_from_json(j);
    if (!o_.n_opt || !o_.d_opt) throw UsageError("orlov translate on a Betti table needs --n and --d");
    ctx = HypersurfaceContext(*o_.n_opt, *o_.d_opt);
  }
  set_context(report, *ctx);
  const CohomologyTable t = betti_to_table(*ctx, b);
  report.add_result("table", table_cells(t));
  report.add_result("total", t.total());
  for (const auto& d : t.diagnostics()) report.add_diagnostic(d);
  if (o_.output.empty() && !o_.json)
    for (const auto& d : t.diagnostics()) err_ << "warning: " << d << "\n";
  emit_document(table_to_json(t), report);
}

void Cli::check_bgs_cmd() {
  Report report("check bgs");
  const MatrixFactorization F = load_mf(o_.file, report);
  const HypersurfaceContext ctx = require_context(F);
  set_context(report, ctx);
  const BgsVerdict v = check_bgs(ctx, F);
  report.add_result("rank", v.rank);
  report.add_result("reduced_rank", v.reduced_rank);
  report.add_result("bound", v.bound);
  report.add_verdict("rank(F0) >= 2^e", v.trivial ? "not applicable" : (v.pass ? "pass" : "fail"),
                     Json{{"rank", v.reduced_rank}, {"bound", v.bound}, {"trivial", v.trivial}});
  if (!v.trivial && !v.pass) report.add_diagnostic("would-be counterexample to the rank bound");
  emit(report);
}

void Cli::sweep_cmd() {
  Report report("sweep rho-structure-sheaf");
  if (o_.n_max < 1 || o_.d_max < 2) throw DomainError(kModule, "sweep needs --n-max >= 1 and --d-max >= 2");
  report.add_input("n_max", std::to_string(o_.n_max));
  report.add_input("d_max", std::to_string(o_.d_max));
  const auto rows = sweep_rho_structure_sheaf_parallel(o_.n_max, o_.d_max, o_.threads);
  const std::string csv = sweep_csv(rows);
  const auto failures = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.pass; });
  report.add_result("rows", rows.size());
  report.add_result("failures", failures);
  if (!o_.output.empty()) {
    write_text_file(o_.output, csv);
    report.add_result("written", o_.output);
    emit(report);
  } else if (o_.json) {
    Json list = Json::array();
    for (const SweepRow& r : rows)
      list.push_back(Json{{"n", r.n}, {"d", r.d}, {"a", r.a}, {"e", r.e}, {"rho", r.rho}, {"bound", r.bound},
                          {"pass", r.pass}});
    report.add_result("table", std::move(list));
    emit(report);
  } else {
    out_ << csv;
  }
}

void Cli::build(CLI::App& app) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o_.json, "emit the report as JSON");
  app.add_option("--output", o_.output, "write the produced document to this path");
  app.add_option("--seed", o_.seed, "seed for fuzz subcommands");

  // mf
  CLI::App* mf = app.add_subcommand("mf", "matrix factorizations")->require_subcommand(1);
  add_file(leaf(mf, "validate", "validate a factorization document", [this] { mf_validate_cmd(); }));
  add_file(leaf(mf, "reduce", "split off trivial summands", [this] {
    mf_unary("mf reduce", [](const MatrixFactorization& F, Report& report) {
      ReduceResult r = mf_reduce_counted(F);
      report.add_result("splits", r.splits);
      return r.value;
    });
  }));
  add_file(leaf(mf, "shift", "F[1] = (F1, F0(d), -s1, -s0)", [this] {
    mf_unary("mf shift", [](const MatrixFactorization& F, Report&) { return mf_shift(F); });
  }));
  {
    CLI::App* sub = leaf(mf, "twist", "F(t)", [this] {
      mf_unary("mf twist", [this](const MatrixFactorization& F, Report& report) {
        report.add_input("by", std::to_string(o_.by));
        return mf_twist(F, o_.by);
      });
    });
    add_file(sub);
    sub->add_option("--by", o_.by, "twist t")->required();
  }
  add_file(leaf(mf, "dual", "transpose dual, normalized", [this] {
    mf_unary("mf dual", [](const MatrixFactorization& F, Report&) { return mf_dual(F); });
  }));
  {
    CLI::App* sub = leaf(mf, "tensor", "tensor product, a factorization of f + g", [this] { mf_tensor_cmd(); });
    sub->add_option("first", o_.file, "factorization of f")->required();
    sub->add_option("second", o_.file2, "factorization of g")->required();
    sub->add_flag("--normalize", o_.normalize, "twist so the smallest F1 degree is 0");
  }
  {
    CLI::App* sub = leaf(mf, "betti", "Betti table of a reduced factorization", [this] { mf_betti_cmd(); });
    add_file(sub);
    add_context_overrides(sub);
  }
  {
    CLI::App* sub = leaf(mf, "fermat", "tensor of elementary Fermat factors", [this] { mf_fermat_cmd(); });
    sub->add_option("--pairs", o_.pairs, "number of (x^m + i y^m, x^m - i y^m) factors")->required();
    sub->add_option("--half-degree", o_.half_degree, "m, so f has degree 2m")->required();
    sub->add_flag("--solo", o_.solo, "add one (x^m, x^m) factor");
    sub->add_option("--field", o_.field, "Qi or Fp");
    sub->add_option("--p", o_.prime, "prime for --field Fp");
  }
  {
    CLI::App* sub = leaf(mf, "fuzz", "randomized property checks", [this] { mf_fuzz_cmd(); });
    sub->add_option("--cases", o_.cases, "number of random factorizations");
    sub->add_option("--field", o_.field, "Q, Qi or Fp (default Fp)");
    sub->add_option("--p", o_.prime, "prime for --field Fp (default 13)");
    sub->preparse_callback([this](std::size_t) {
      o_.field = "Fp";
      o_.prime = 13;
    });
  }
  for (const auto& [sub, action] : actions_)
    if (sub->get_parent() == mf && sub->get_name() != "fermat" && sub->get_name() != "fuzz" &&
        sub->get_name() != "betti")
      add_context_overrides(sub);

  // bott
  CLI::App* bott_cmd = app.add_subcommand("bott", "Bott formula")->require_subcommand(1);
  {
    CLI::App* sub = leaf(bott_cmd, "eval", "h^q(P^n, Omega^p(l))", [this] {
      Report report("bott eval");
      report.add_input("args", std::to_string(o_.n) + "," + std::to_string(o_.p) + "," + std::to_string(o_.q) + "," +
                                   std::to_string(o_.l));
      report.add_result("value", bott(o_.n, o_.p, o_.q, o_.l));
      emit(report);
    });
    add_n(sub);
    sub->add_option("--p", o_.p, "form degree p")->required();
    sub->add_option("--q", o_.q, "cohomological degree q")->required();
    sub->add_option("--l", o_.l, "twist l")->required();
  }
  {
    CLI::App* sub = leaf(bott_cmd, "vector", "q -> h^q(P^n, Omega^p(l))", [this] {
      Report report("bott vector");
      report.add_input("args", std::to_string(o_.n) + "," + std::to_string(o_.p) + "," + std::to_string(o_.l));
      const CohomologyVector v = bott_vector(o_.n, o_.p, o_.l);
      Json values = Json::array();
      for (int k = 0; k <= o_.n; ++k) values.push_back(v[k]);
      report.add_result("vector", values);
      report.add_result("euler_characteristic", v.euler_characteristic());
      emit(report);
    });
    add_n(sub);
    sub->add_option("--p", o_.p, "form degree p")->required();
    sub->add_option("--l", o_.l, "twist l")->required();
  }
  {
    CLI::App* sub = leaf(bott_cmd, "restricted", "q -> h^q(O_X (x) Omega^r(r + t))", [this] {
      Report report("bott restricted");
      set_context(report, HypersurfaceContext(o_.n, o_.d));
      report.add_input("args", std::to_string(o_.r) + "," + std::to_string(o_.t));
      const CohomologyVector v = restricted_bott(o_.n, o_.d, o_.r, o_.t);
      Json values = Json::array();
      for (int k = 0; k <= o_.n; ++k) values.push_back(v[k]);
      report.add_result("vector", values);
      report.add_result("euler_characteristic", v.euler_characteristic());
      emit(report);
    });
    add_n(sub);
    add_d(sub);
    sub->add_option("--r", o_.r, "form degree r")->required();
    sub->add_option("--t", o_.t, "extra twist t")->default_val(0);
  }

  // rho
  CLI::App* rho = app.add_subcommand("rho", "the invariant rho")->require_subcommand(1);
  {
    CLI::App* sub = leaf(rho, "structure-sheaf", "rho(O_X) for a <= 0", [this] {
      Report report("rho structure-sheaf");
      const HypersurfaceContext ctx(o_.n, o_.d);
      set_context(report, ctx);
      const Count value = rho_structure_sheaf(o_.n, o_.d);
      report.add_result("rho", value);
      const RhoVerdict v = check_rho(ctx, value);
      report.add_verdict("rho >= 2^(e+1)", v.pass ? "pass" : "fail", Json{{"value", v.value}, {"bound", v.bound}});
      emit(report);
    });
    add_n(sub);
    add_d(sub);
  }
  {
    CLI::App* sub = leaf(rho, "point", "rho of a point sheaf, 2^n", [this] {
      Report report("rho point");
      report.add_input("n", std::to_string(o_.n));
      report.add_result("rho", rho_point(o_.n));
      emit(report);
    });
    add_n(sub);
  }
  {
    CLI::App* sub = leaf(rho, "line-bundle", "rho(O_X(j))", [this] {
      Report report("rho line-bundle");
      set_context(report, HypersurfaceContext(o_.n, o_.d));
      report.add_input("j", std::to_string(o_.j));
      report.add_result("rho", rho_line_bundle(o_.n, o_.d, o_.j));
      emit(report);
    });
    add_n(sub);
    add_d(sub);
    sub->add_option("--j", o_.j, "twist j")->required();
  }
  {
    CLI::App* sub = leaf(rho, "from-mf", "rho of a reduced factorization", [this] { rho_from_mf_cmd(); });
    add_file(sub);
    add_context_overrides(sub);
  }
  {
    CLI::App* sub = leaf(rho, "from-table", "total of a cohomology table", [this] {
      Report report("rho from-table");
      const Json j = read_json_file(o_.file);
      report.add_input("document", j.dump());
      const CohomologyTable t = table_from_json(j);
      report.add_result("rho", rho_of_table(t));
      for (const auto& d : t.diagnostics()) report.add_diagnostic(d);
      emit(report);
    });
    add_file(sub, "cohomology table document");
  }

  // orlov
  CLI::App* orlov = app.add_subcommand("orlov", "Betti/cohomology translation")->require_subcommand(1);
  {
    CLI::App* sub = leaf(orlov, "translate", "Betti table -> cohomology table", [this] { orlov_translate_cmd(); });
    add_file(sub, "factorization or Betti table document");
    add_context_overrides(sub);
  }
  {
    CLI::App* sub = leaf(orlov, "invert", "cohomology table -> Betti table", [this] {
      Report report("orlov invert");
      const Json j = read_json_file(o_.file);
      report.add_input("document", j.dump());
      const CohomologyTable t = table_from_json(j);
      const HypersurfaceContext ctx(t.n(), o_.d);
      set_context(report, ctx);
      const BettiTable b = table_to_betti(ctx, t);
      report.add_result("betti", betti_cells(b));
      report.add_result("total", b.total());
      emit_document(betti_to_json(b), report);
    });
    add_file(sub, "cohomology table document");
    add_d(sub);
  }
  {
    CLI::App* sub = leaf(orlov, "phi0", "descriptor of Phi_0(k(l))", [this] {
      Report report("orlov phi0");
      const HypersurfaceContext ctx(o_.n, o_.d);
      set_context(report, ctx);
      report.add_input("l", std::to_string(o_.l));
      const Phi0Descriptor phi = phi0_residue(ctx, o_.l);
      report.add_result("zero", phi.zero);
      if (!phi.zero) {
        report.add_result("exterior_power", phi.exterior_power);
        report.add_result("twist", phi.twist);
        report.add_result("shift", phi.shift);
      }
      report.add_result("descriptor", phi0_text(phi));
      emit(report);
    });
    add_n(sub);
    add_d(sub);
    sub->add_option("--l", o_.l, "degree l")->required();
  }
  {
    CLI::App* sub = leaf(orlov, "shamash", "generator degrees of the Shamash resolution term", [this] {
      Report report("orlov shamash");
      set_context(report, HypersurfaceContext(o_.n, o_.d));
      report.add_input("m", std::to_string(o_.m));
      const auto terms = shamash_degrees(o_.n, o_.d, o_.m);
      Json list = Json::array();
      Count rank = 0;
      for (const auto& [degree, mult] : terms) {
        list.push_back(Json{{"degree", degree}, {"multiplicity", mult}});
        rank += mult;
      }
      report.add_result("degrees", list);
      report.add_result("rank", rank);
      report.add_result("module", shamash_text(terms));
      emit(report);
    });
    add_n(sub);
    add_d(sub);
    sub->add_option("--m", o_.m, "cohomological index m <= 0")->required();
  }
  {
    CLI::App* sub = leaf(orlov, "dual-table", "(p, h) -> (n - p, n - 1 - h)", [this] {
      Report report("orlov dual-table");
      const Json j = read_json_file(o_.file);
      report.add_input("document", j.dump());
      const CohomologyTable t = table_from_json(j);
      const HypersurfaceContext ctx(t.n(), o_.d);
      set_context(report, ctx);
      const CohomologyTable dual = dual_table(ctx, t);
      report.add_result("table", table_cells(dual));
      report.add_result("total", dual.total());
      emit_document(table_to_json(dual), report);
    });
    add_file(sub, "cohomology table document");
    add_d(sub);
  }

  // check
  CLI::App* check = app.add_subcommand("check", "conjectured lower bounds")->require_subcommand(1);
  {
    CLI::App* sub = leaf(check, "bgs", "rank(F0) >= 2^e", [this] { check_bgs_cmd(); });
    add_file(sub);
    add_context_overrides(sub);
  }
  {
    CLI::App* sub = leaf(check, "rho", "rho >= 2^(e+1)", [this] {
      Report report("check rho");
      const HypersurfaceContext ctx(o_.n, o_.d);
      set_context(report, ctx);
      report.add_input("value", std::to_string(o_.value));
      const RhoVerdict v = check_rho(ctx, o_.value);
      report.add_result("value", v.value);
      report.add_result("bound", v.bound);
      report.add_verdict("rho >= 2^(e+1)", v.pass ? "pass" : "fail", Json{{"value", v.value}, {"bound", v.bound}});
      emit(report);
    });
    add_n(sub);
    add_d(sub);
    sub->add_option("--value", o_.value, "value of rho")->required();
  }

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "batch sweeps")->require_subcommand(1);
  {
    CLI::App* sub = leaf(sweep, "rho-structure-sheaf", "rho(O_X) against 2^(e+1) over a grid",
                         [this] { sweep_cmd(); });
    sub->add_option("--n-max", o_.n_max, "largest n")->required();
    sub->add_option("--d-max", o_.d_max, "largest d")->required();
  }
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"mfkit: graded matrix factorizations and Beilinson tables", "mfkit"};
  build(app);
  try {
    if (const char* env = std::getenv("MFKIT_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1 || v > 4096)
        throw UsageError("MFKIT_THREADS must be a positive integer, got \"" + std::string(env) + "\"");
      o_.threads = static_cast<int>(v);
      kernels::set_max_threads(o_.threads);
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto& [sub, action] : actions_)
      if (sub->parsed()) {
        action();
        break;
      }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    err_ << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err_ << "error: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) err_ << "  " << d.to_string() << "\n";
    return 2;
  } catch (const Error& e) {
    err_ << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err_ << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace mfkit
