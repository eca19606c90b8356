// Acceptance harness: one pass/fail line per criterion, nonzero exit code on
// any failure. Every tolerance is pinned here, in code.

#include "kfcl/caselab.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

namespace {

using namespace kfcl;

int failures = 0;

void report(int number, const char* title, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              title, detail.c_str());
  if (!pass) ++failures;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Largest residual among the named entries; fails loudly on a missing name.
double max_residual(const ScenarioResult& r,
                    std::initializer_list<const char*> names) {
  double worst = 0;
  for (const char* name : names) {
    worst = std::max(worst, r.residuals.at(name));
  }
  return worst;
}

std::string eng(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::scientific << v;
  return out.str();
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioResult r = run_scenario("octonion_identities");
  const double elapsed = ms_since(t0);
  const double worst = max_residual(
      r, {"composition_norm", "composition_inner_left",
          "composition_inner_right", "adjoint_left", "adjoint_right",
          "cancel_right", "cancel_left", "inverse_solve_left",
          "inverse_solve_right", "polarization_left", "polarization_right",
          "moufang_left", "moufang_right", "moufang_middle"});
  const bool witness =
      r.witnesses.at("non_associativity").at("gap").get<double>() > 0.1;
  const bool pass = r.pass && worst < 1e-11 && witness && elapsed < 1000.0;
  report(1, "octonion identity suite on 1000 seeded inputs", pass,
         "max residual " + eng(worst) + ", " + eng(elapsed / 1000) + " s");
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioResult r = run_scenario("triality_core");
  const double elapsed = ms_since(t0);
  const double families =
      max_residual(r, {"family_fixing_unit", "family_left_right"});
  const double comp = r.residuals.at("companions_residual");
  const bool pass = r.pass && families < 1e-12 && comp < 1e-9 &&
                    r.witnesses.at("companion_trials") == 50 &&
                    elapsed < 10000.0;
  report(2, "triality families and 50 companion sign pairs", pass,
         "families " + eng(families) + ", companions " + eng(comp) + ", " +
             eng(elapsed / 1000) + " s");
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const ScenarioResult r = run_scenario("lie_dims");
  const double elapsed = ms_since(t0);
  const bool ranks = r.residuals.at("rank_s1") == 0.0 &&
                     r.residuals.at("rank_s2") == 0.0 &&
                     r.residuals.at("rank_s3") == 0.0 &&
                     r.residuals.at("g2_dim") == 0.0;
  const double closure =
      max_residual(r, {"closure_s1", "closure_s2", "closure_s3"});
  const double deriv = r.residuals.at("g2_derivation_identity");
  const double curve = r.residuals.at("curve_span_distance");
  const bool pass = r.pass && ranks && closure < 1e-9 && deriv < 1e-10 &&
                    curve < 1e-6 && elapsed < 10000.0;
  report(3, "ranks 21/28/36, derivations 14, closure, curve check", pass,
         "closure " + eng(closure) + ", derivation " + eng(deriv) +
             ", curve " + eng(curve) + ", " + eng(elapsed / 1000) + " s");
}

void criterion4() {
  const ScenarioResult r = run_scenario("spin9_contradiction");
  const double conj = r.residuals.at("conjugation_exact");
  const double pr = std::max(r.residuals.at("projection_before"),
                             r.residuals.at("projection_after"));
  const bool pass = r.pass && conj < 1e-12 && pr == 0.0;
  report(4, "quarter-turn conjugation doubles the 15-sphere projection", pass,
         "conjugation " + eng(conj) + ", projections exact");
}

void criterion5() {
  ScenarioParams p;
  p.abc = {1.0, 0.5, 0.25};
  const ScenarioResult line = run_scenario("spin7_line", p);
  const ScenarioResult sym = run_scenario("spin7_symmetric", p);
  const bool eight = line.witnesses.at("distinct_values") == 8;
  const double proj = line.residuals.at("projection_exact");
  const double signs = line.residuals.at("sign_target_distance");
  const double cover = sym.residuals.at("coverage_distance");
  const bool pass = line.pass && sym.pass && eight && proj < 1e-12 &&
                    signs < 1e-6 && cover < 1e-6;
  report(5, "7-sphere line of sign targets and full sphere coverage", pass,
         "projection " + eng(proj) + ", signs " + eng(signs) + ", coverage " +
             eng(cover));
}

void criterion6() {
  const ScenarioResult u = run_scenario("u_ellipsoid");
  const ScenarioResult sp = run_scenario("sp_no_kfcl");
  const ScenarioResult round = run_scenario("spsp1_round");
  const ScenarioResult zero = run_scenario("g2_zero");
  const double fits =
      max_residual(u, {"s3_fit_residual", "s5_fit_residual"});
  const double ratio = sp.residuals.at("proportionality_ratio");
  const bool ratio_ok = ratio > 1e-6 && std::abs(ratio - 1.0) > 1e-6 &&
                        max_residual(sp, {"first_point_distance",
                                          "second_point_distance"}) < 1e-6;
  const double spread = round.residuals.at("norm_spread");
  const double center = round.residuals.at("fit_center");
  const double g2dist = zero.residuals.at("zero_target_distance");
  const bool pass = u.pass && sp.pass && round.pass && zero.pass &&
                    fits < 1e-8 && ratio_ok && spread < 1e-8 &&
                    center < 1e-8 && g2dist < 1e-6;
  report(6, "classical cases: ellipsoid fits, proportional pair, round "
            "sphere, forced zero",
         pass,
         "fits " + eng(fits) + ", ratio " + eng(ratio) + ", spread " +
             eng(spread) + ", zero " + eng(g2dist));
}

void criterion7() {
  // The circle field on the 3-sphere: constant length for the round norm and
  // a translation-like flow, tying the sample criterion to the distance
  // definition.
  const SphereModel model = make_model(SphereKind::U, 1);
  const Matrix X = model.lie_basis[2] + model.lie_basis[3];  // i * identity
  const OrbitSample sample = sample_orbit(model, X, 300, 42);
  const MinkowskiNorm round_norm =
      MinkowskiNorm::riemannian(Matrix::Identity(4, 4));
  const KfclCheck k = kfcl_check(sample, round_norm);
  const double spread = k.spread;
  const double deviation =
      round_cw_check(model, mat_exp(0.8 * X), 300, 43);
  const bool pass = spread < 1e-10 && deviation < 1e-10;
  report(7, "circle field: constant length and constant displacement", pass,
         "length spread " + eng(spread) + ", distance deviation " +
             eng(deviation));
}

void criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  ScenarioParams p;
  p.seed = 42;
  const Report first = run_all(p);
  const double one_run = ms_since(t0);
  const Report second = run_all(p);
  const bool identical =
      first.to_json().dump(2) == second.to_json().dump(2);
  const bool pass = identical && first.all_pass && one_run < 120000.0;
  report(8, "seed-42 reports are byte-identical and fast", pass,
         std::string(identical ? "identical JSON" : "JSON MISMATCH") + ", " +
             eng(one_run / 1000) + " s per full run");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::printf("%d/8 acceptance criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
