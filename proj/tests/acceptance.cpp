// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "parabose/bosonization.hpp"
#include "parabose/relations.hpp"
#include "parabose/representations.hpp"
#include "parabose/sampling.hpp"
#include "parabose/super_hopf.hpp"

using namespace parabose;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string counts(const Report& r) {
  return std::to_string(r.count(Status::Pass)) + " passed, " + std::to_string(r.failures()) + " failed, " +
         std::to_string(r.count(Status::Skip)) + " skipped";
}

// Largest numeric residual among the entries of `r` (lhs holds the residual).
double worst_residual(const Report& r) {
  double worst = 0;
  for (const auto& e : r.entries()) {
    try {
      worst = std::max(worst, std::stod(e.lhs));
    } catch (const std::exception&) {
    }
  }
  return worst;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome ideal_reduction() {
  const auto t0 = Clock::now();
  const auto pb = paraboson_relations(3);
  const auto bos = boson_relations(3);
  std::size_t zero_pb = 0, zero_b = 0;
  for (const auto& r : pb) zero_pb += normal_form(r.element, shared_context(ContextKind::Paraboson)).is_zero();
  for (const auto& r : bos) zero_b += normal_form(r.element, shared_context(ContextKind::Boson)).is_zero();
  const double t = seconds_since(t0);
  return {pb.size() >= 216 && zero_pb == pb.size() && zero_b == bos.size() && t < 10.0,
          std::to_string(zero_pb) + "/" + std::to_string(pb.size()) + " paraboson and " + std::to_string(zero_b) +
              "/" + std::to_string(bos.size()) + " boson generators reduce to 0 in " + sci(t) + " s (limit 10 s)"};
}

Outcome boson_quotient() {
  std::size_t zero = 0;
  const auto pb = paraboson_relations(3);
  for (const auto& r : pb) zero += phi_replacement(r.element).is_zero();
  Report ccr;
  for (FockSpec spec : {FockSpec{1, 1, 6}, FockSpec{2, 1, 5}, FockSpec{3, 1, 4}})
    ccr.append(verify_boson_degeneration(build_green_ansatz(spec)));
  const bool ok = zero == pb.size() && ccr.all_passed();
  return {ok, "phi sends " + std::to_string(zero) + "/" + std::to_string(pb.size()) +
                  " paraboson generators to 0; p=1 CCR: " + counts(ccr) + ", worst residual " +
                  sci(worst_residual(ccr)) + " (tol 1e-10)"};
}

Outcome super_hopf() {
  const auto t0 = Clock::now();
  const Report r = check_super_hopf_axioms(4, 2);
  const double t = seconds_since(t0);
  const std::size_t words = r.select("coassociativity").size();
  const bool ok = r.all_passed() && words == 4 + 16 + 64 + 256 && !r.select("ideal_antipode").empty() && t < 120;
  return {ok, std::to_string(words) + " words, " + counts(r) + " in " + sci(t) + " s (limit 120 s)"};
}

Outcome bosonisation() {
  const Report r = bosonise_from_general(3, 2);
  const bool ok = r.all_passed() && r.select("coproduct_general_vs_explicit").size() == 5 + 25 + 125 &&
                  r.select("antipode_general_vs_explicit").size() == 5 + 25 + 125;
  return {ok, "general vs explicit on all words of length <= 3 over {B+-1, B+-2, g}: " + counts(r)};
}

Outcome ordinary_hopf() {
  const Report g = check_ordinary_hopf_axioms(ContextKind::ParabosonG, 4, 2);
  const Report k = check_ordinary_hopf_axioms(ContextKind::ParabosonK, 4, 2);
  const bool ok = g.all_passed() && k.all_passed() && g.select("coassociativity").size() == 5 + 25 + 125 + 625 &&
                  k.select("coassociativity").size() == 6 + 36 + 216 + 1296;
  return {ok, "with g: " + counts(g) + "; with K+-: " + counts(k)};
}

Outcome quasitriangular() {
  const Report r = check_quasitriangularity_g(3, 2);
  const bool ok = r.all_passed() && r.select("hexagon_left").size() == 1 && r.select("hexagon_right").size() == 1 &&
                  r.select("r_conjugates_coproduct_to_opposite").size() == 5 + 25 + 125;
  return {ok, "R_g D(w) R_g^-1 = D^op(w) on 155 words, both hexagons, R_g^2 = 1: " + counts(r)};
}

Outcome casimir() {
  Report sym;
  for (std::uint32_t n = 1; n <= 2; ++n) sym.append(verify_casimcom_symbolic(3, n));
  Report mat;
  for (FockSpec spec : {FockSpec{1, 2, 6}, FockSpec{2, 2, 4}}) mat.append(verify_casimcom(build_green_ansatz(spec), 4));
  return {sym.all_passed() && mat.all_passed(),
          "symbolic m<=3, n<=2: " + counts(sym) + "; matrix m<=4 on (1,2,6),(2,2,4): " + counts(mat) +
              ", worst residual " + sci(worst_residual(mat)) + " (tol 1e-9)"};
}

Outcome k_relations_check() {
  Report r;
  for (FockSpec spec : {FockSpec{1, 1, 6}, FockSpec{1, 2, 6}, FockSpec{1, 3, 6}, FockSpec{2, 2, 4}})
    r.append(verify_k_relations(build_green_ansatz(spec)));
  const bool ok = r.all_passed() && !r.select("k_anticommutes_with_b_symbolic").empty() &&
                  !r.select("k_inverse_symbolic").empty();
  return {ok, "{K, B} and K+K- - 1 on four Fock spaces plus exact pbk reductions: " + counts(r) +
                  ", worst residual " + sci(worst_residual(r)) + " (tol 1e-10 / 1e-12)"};
}

Outcome oracle() {
  Report r;
  std::size_t samples = 500;
  for (FockSpec spec : {FockSpec{1, 2, 6}, FockSpec{2, 2, 6}}) {
    const MatrixRep rep = build_green_ansatz(spec);
    std::mt19937_64 rng(2024 + spec.n);
    for (ContextKind ctx : {ContextKind::Paraboson, ContextKind::ParabosonG, ContextKind::ParabosonK})
      r.append(oracle_agreement(rep, ctx, samples, 5, rng));
  }
  const bool ok = r.all_passed() && r.entries().size() == 2 * 3 * samples;
  return {ok, "500 words of length <= 5 per context (pb, pbg, pbk) on (1,2,6) and (2,2,6): " + counts(r) +
                  ", worst residual " + sci(worst_residual(r)) + " (tol 1e-9)"};
}

Outcome confluence() {
  const AlgebraContext& ctx = shared_context(ContextKind::Paraboson);
  const auto alphabet = context_alphabet(ContextKind::Paraboson, 2, true);
  std::mt19937_64 words(10), order_a(11), order_b(12);
  std::size_t agree = 0;
  const std::size_t total = 1000;
  for (std::size_t k = 0; k < total; ++k) {
    const Element w(random_word(words, alphabet, 6));
    const Element a = normal_form_randomized(w, ctx, order_a);
    const Element b = normal_form_randomized(w, ctx, order_b);
    agree += a == b && a == normal_form(w, ctx);
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) +
                              " random words give identical normal forms under two random rule orders"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"ideal reduction", ideal_reduction},
      {"boson quotient", boson_quotient},
      {"super-Hopf suite", super_hopf},
      {"bosonisation cross-validation", bosonisation},
      {"ordinary Hopf suites", ordinary_hopf},
      {"quasitriangularity", quasitriangular},
      {"powers of N commutator", casimir},
      {"K relations", k_relations_check},
      {"oracle agreement", oracle},
      {"confluence", confluence},
  };
  const auto t0 = Clock::now();
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = seconds_since(t0);
  std::printf("total wall-clock %.1f s (limit 300 s)\n", total);
  if (total >= 300) ++failed;
  return failed == 0 ? 0 : 1;
}
