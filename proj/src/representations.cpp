#include "parabose/representations.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "parabose/bosonization.hpp"
#include "parabose/relations.hpp"
#include "parabose/sampling.hpp"
#include "parabose/super_hopf.hpp"

namespace parabose {

namespace {

using Triplet = Eigen::Triplet<Complex>;

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

std::string tolerance_label(double tol) { return "<= " + format_residual(tol); }

void add_numeric(Report& report, const std::string& ctx, const std::string& axiom, const std::string& word,
                 double residual, double tol) {
  report.add(ctx, axiom, word, residual <= tol, format_residual(residual), tolerance_label(tol));
}

// i^t for integer t.
Complex i_power(long t) {
  switch (((t % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

SparseMatrix diagonal(const std::vector<Complex>& d) {
  SparseMatrix m(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  std::vector<Triplet> t;
  t.reserve(d.size());
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != Complex{}) t.emplace_back(k, k, d[k]);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseMatrix identity(std::size_t dim) { return diagonal(std::vector<Complex>(dim, Complex{1, 0})); }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros()) * static_cast<std::size_t>(b.nonZeros()));
  for (Eigen::Index ca = 0; ca < a.outerSize(); ++ca)
    for (SparseMatrix::InnerIterator ia(a, ca); ia; ++ia)
      for (Eigen::Index cb = 0; cb < b.outerSize(); ++cb)
        for (SparseMatrix::InnerIterator ib(b, cb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

// Image of a word under a letter assignment, applied to `start` from the right.
template <class LetterFn>
SparseMatrix apply_word(const Word& w, LetterFn&& letter, SparseMatrix start) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) start = letter(*it) * start;
  return start;
}

template <class LetterFn>
SparseMatrix apply_element(const Element& a, LetterFn&& letter, const SparseMatrix& start) {
  SparseMatrix out(start.rows(), start.cols());
  for (const auto& [w, c] : a.terms()) {
    const Complex coeff = c.to_complex();
    out += apply_word(w, letter, start) * coeff;
  }
  return out;
}

}  // namespace

DimensionOverflow::DimensionOverflow(std::size_t dim, std::size_t c)
    : std::runtime_error("Fock space dimension " + (dim == 0 ? std::string("(overflow)") : std::to_string(dim)) +
                         " exceeds cap " + std::to_string(c)),
      dimension(dim),
      cap(c) {}

UnrepresentableLetter::UnrepresentableLetter(const Generator& x, const std::string& why)
    : std::invalid_argument("letter " + x.str() + " is not representable: " + why), letter(x) {}

void FockSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  if (cutoff < 2) throw std::invalid_argument("cutoff must be at least 2");
}

std::size_t FockSpec::dimension() const {
  std::size_t dim = std::size_t{1} << clifford_qubits();
  const std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t k = 0; k < std::uint64_t{n} * p; ++k) {
    if (dim > limit / cutoff) return 0;
    dim *= cutoff;
  }
  return dim;
}

std::size_t default_dimension_cap() {
  if (const char* env = std::getenv("PARABOSE_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

const SparseMatrix& MatrixRep::letter(const Generator& x) const {
  auto it = letters_.find(x);
  if (it == letters_.end())
    throw UnrepresentableLetter(x, "mode index outside 1.." + std::to_string(spec_.n));
  return it->second;
}

std::uint32_t MatrixRep::occupancy(std::size_t state, std::uint32_t alpha, std::uint32_t mode) const {
  std::size_t rest = state % boson_block_;
  for (std::uint32_t k = 0; k < alpha * spec_.n + mode; ++k) rest /= spec_.cutoff;
  return static_cast<std::uint32_t>(rest % spec_.cutoff);
}

std::uint32_t MatrixRep::total_occupancy(std::size_t state) const {
  std::size_t rest = state % boson_block_;
  std::uint32_t total = 0;
  for (std::uint32_t k = 0; k < spec_.n * spec_.p; ++k) {
    total += static_cast<std::uint32_t>(rest % spec_.cutoff);
    rest /= spec_.cutoff;
  }
  return total;
}

const std::vector<std::size_t>& MatrixRep::guarded_states(std::size_t length) const {
  static const std::vector<std::size_t> none;
  return length < guarded_.size() ? guarded_[length] : none;
}

SparseMatrix MatrixRep::selector(std::size_t length) const {
  const auto& states = guarded_states(length);
  SparseMatrix s(static_cast<Eigen::Index>(dimension_), static_cast<Eigen::Index>(states.size()));
  std::vector<Triplet> t;
  t.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) t.emplace_back(states[k], k, Complex{1, 0});
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

MatrixRep build_green_ansatz(const FockSpec& spec, std::size_t dim_cap) {
  spec.validate();
  const std::size_t dim = spec.dimension();
  if (dim == 0 || dim > dim_cap) throw DimensionOverflow(dim, dim_cap);

  MatrixRep rep;
  rep.spec_ = spec;
  rep.dimension_ = dim;
  rep.boson_block_ = dim >> spec.clifford_qubits();
  const std::size_t d = spec.cutoff;

  std::vector<std::size_t> stride(std::size_t{spec.n} * spec.p);
  for (std::size_t k = 0, s = 1; k < stride.size(); ++k, s *= d) stride[k] = s;

  // gamma_(2k) = Z..Z X_k, gamma_(2k+1) = Z..Z Y_k on the Clifford index bits.
  auto gamma = [](std::uint32_t alpha, std::size_t c) -> std::pair<std::size_t, Complex> {
    const std::size_t qubit = alpha / 2;
    const std::size_t below = c & ((std::size_t{1} << qubit) - 1);
    Complex phase = (__builtin_popcountll(below) % 2) ? Complex{-1, 0} : Complex{1, 0};
    const bool bit = (c >> qubit) & 1;
    if (alpha % 2 == 1) phase *= bit ? Complex{0, -1} : Complex{0, 1};
    return {c ^ (std::size_t{1} << qubit), phase};
  };

  for (std::uint32_t i = 1; i <= spec.n; ++i)
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      std::vector<Triplet> t;
      for (std::size_t state = 0; state < dim; ++state) {
        const std::size_t c = state / rep.boson_block_;
        const std::size_t bosons = state % rep.boson_block_;
        for (std::uint32_t alpha = 0; alpha < spec.p; ++alpha) {
          const std::size_t st = stride[alpha * spec.n + (i - 1)];
          const std::size_t occ = (bosons / st) % d;
          std::size_t target;
          double amp;
          if (s == Sign::Plus) {
            if (occ + 1 >= d) continue;
            target = bosons + st;
            amp = std::sqrt(static_cast<double>(occ + 1));
          } else {
            if (occ == 0) continue;
            target = bosons - st;
            amp = std::sqrt(static_cast<double>(occ));
          }
          const auto [c2, phase] = gamma(alpha, c);
          t.emplace_back(c2 * rep.boson_block_ + target, state, phase * amp);
        }
      }
      SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
      m.setFromTriplets(t.begin(), t.end());
      rep.letters_.emplace(Generator::b(s, i), std::move(m));
    }

  for (const auto& e : e_symbols(spec.n)) {
    const SparseMatrix& a = rep.letters_.at(e.first_factor());
    const SparseMatrix& b = rep.letters_.at(e.second_factor());
    SparseMatrix m = a * b + b * a;
    m.prune(Complex{});
    rep.letters_.emplace(e, std::move(m));
  }

  std::vector<Complex> g(dim), kp(dim), km(dim);
  const long np = static_cast<long>(spec.n) * spec.p;
  for (std::size_t state = 0; state < dim; ++state) {
    const long occ = rep.total_occupancy(state);
    g[state] = occ % 2 ? Complex{-1, 0} : Complex{1, 0};
    // exp(+-i pi (occ + np/2)) = i^(+-(2 occ + np))
    kp[state] = i_power(2 * occ + np);
    km[state] = i_power(-(2 * occ + np));
  }
  rep.letters_.emplace(Generator::g(), diagonal(g));
  rep.letters_.emplace(Generator::k_plus(), diagonal(kp));
  rep.letters_.emplace(Generator::k_minus(), diagonal(km));

  rep.guarded_.resize(spec.cutoff + 1);
  for (std::size_t state = 0; state < dim; ++state) {
    std::uint32_t top = 0;
    for (std::uint32_t alpha = 0; alpha < spec.p; ++alpha)
      for (std::uint32_t mode = 0; mode < spec.n; ++mode) top = std::max(top, rep.occupancy(state, alpha, mode));
    for (std::size_t len = 0; len + top <= spec.cutoff; ++len) rep.guarded_[len].push_back(state);
  }
  return rep;
}

std::size_t weighted_length(const Word& w) {
  std::size_t len = 0;
  for (const auto& x : w) len += x.is_e() ? 2 : x.is_b() ? 1 : 0;
  return len;
}

std::size_t weighted_length(const Element& a) {
  std::size_t len = 0;
  for (const auto& [w, c] : a.terms()) len = std::max(len, weighted_length(w));
  return len;
}

SparseMatrix represent(const Element& a, const MatrixRep& rep, std::size_t guard_length) {
  return apply_element(a, [&](const Generator& x) -> const SparseMatrix& { return rep.letter(x); },
                       rep.selector(guard_length));
}

SparseMatrix represent(const Element& a, const MatrixRep& rep) { return represent(a, rep, weighted_length(a)); }

SparseMatrix represent_unguarded(const Element& a, const MatrixRep& rep) {
  return apply_element(a, [&](const Generator& x) -> const SparseMatrix& { return rep.letter(x); },
                       identity(rep.dimension()));
}

double max_abs(const SparseMatrix& m) {
  double r = 0;
  for (Eigen::Index c = 0; c < m.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

double guarded_residual(const Element& a, const Element& b, const MatrixRep& rep) {
  const std::size_t len = std::max(weighted_length(a), weighted_length(b));
  return max_abs(represent(a, rep, len) - represent(b, rep, len));
}

SparseMatrix number_operator(const MatrixRep& rep) {
  const double shift = 0.5 * rep.spec().n * rep.spec().p;
  std::vector<Complex> d(rep.dimension());
  for (std::size_t s = 0; s < d.size(); ++s) d[s] = rep.total_occupancy(s) + shift;
  return diagonal(d);
}

std::pair<SparseMatrix, SparseMatrix> k_matrices(const MatrixRep& rep) {
  return {rep.letter(Generator::k_plus()), rep.letter(Generator::k_minus())};
}

SparseMatrix g_matrix(const MatrixRep& rep) { return rep.letter(Generator::g()); }

Report verify_paraboson_relations(const MatrixRep& rep) {
  Report report;
  for (const auto& rel : paraboson_relations(std::min<std::uint32_t>(rep.spec().n, 3)))
    add_numeric(report, "rep", "paraboson_relation", rel.label, max_abs(represent(rel.element, rep)),
                kDirectTolerance);
  return report;
}

Report verify_hermiticity(const MatrixRep& rep) {
  Report report;
  const SparseMatrix sel = rep.selector(1);
  for (std::uint32_t i = 1; i <= rep.spec().n; ++i) {
    const SparseMatrix plus = rep.letter(Generator::b_plus(i)) * sel;
    const SparseMatrix adj = SparseMatrix(rep.letter(Generator::b_minus(i)).adjoint()) * sel;
    add_numeric(report, "rep", "hermiticity", Generator::b_plus(i).str(), max_abs(plus - adj), kDirectTolerance);
  }
  return report;
}

Report verify_boson_degeneration(const MatrixRep& rep) {
  if (rep.spec().p != 1) throw std::invalid_argument("boson degeneration needs p = 1");
  Report report;
  for (const auto& rel : boson_relations(rep.spec().n))
    add_numeric(report, "rep", "boson_degeneration", rel.label, max_abs(represent(rel.element, rep)),
                kDirectTolerance);
  return report;
}

Report verify_number_operator(const MatrixRep& rep) {
  Report report;
  const SparseMatrix n = number_operator(rep);
  double off = 0;
  for (Eigen::Index c = 0; c < n.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(n, c); it; ++it)
      if (it.row() != it.col()) off = std::max(off, std::abs(it.value()));
  add_numeric(report, "rep", "number_operator_diagonal", "N", off, 0.0);

  const double vacuum = std::abs(n.coeff(0, 0) - Complex(0.5 * rep.spec().n * rep.spec().p, 0));
  add_numeric(report, "rep", "number_operator_vacuum", "<0|N|0> - np/2", vacuum, kDirectTolerance);

  Element half_sum;
  for (std::uint32_t i = 1; i <= rep.spec().n; ++i)
    half_sum += anticommutator(Element(Generator::b_plus(i)), Element(Generator::b_minus(i))) * Scalar::rational(1, 2);
  const SparseMatrix sel = rep.selector(2);
  add_numeric(report, "rep", "number_operator_from_ladders", "N - (1/2) sum {B+,B-}",
              max_abs(represent(half_sum, rep, 2) - n * sel), kDirectTolerance);

  const SparseMatrix sel1 = rep.selector(1);
  for (std::uint32_t i = 1; i <= rep.spec().n; ++i)
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const SparseMatrix& b = rep.letter(Generator::b(s, i));
      const SparseMatrix lhs = (n * b - b * n) * sel1;
      const SparseMatrix rhs = b * sel1 * Complex(sign_value(s), 0);
      add_numeric(report, "rep", "number_operator_ladder", Generator::b(s, i).str(), max_abs(lhs - rhs),
                  kDirectTolerance);
    }
  return report;
}

Report verify_casimcom(const MatrixRep& rep, unsigned m_max) {
  Report report;
  const std::size_t dim = rep.dimension();
  const SparseMatrix sel = rep.selector(1);
  const double shift = 0.5 * rep.spec().n * rep.spec().p;
  for (unsigned m = 0; m <= m_max; ++m) {
    std::vector<Complex> nm(dim), np1(dim), nm1(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      const double v = rep.total_occupancy(s) + shift;
      nm[s] = std::pow(v, m);
      np1[s] = std::pow(v + 1, m);
      nm1[s] = std::pow(v - 1, m);
    }
    const SparseMatrix pm = diagonal(nm);
    for (std::uint32_t i = 1; i <= rep.spec().n; ++i) {
      const SparseMatrix& bp = rep.letter(Generator::b_plus(i));
      const SparseMatrix& bm = rep.letter(Generator::b_minus(i));
      const SparseMatrix lp = (pm * bp - bp * pm) * sel;
      const SparseMatrix rp = bp * (diagonal(np1) - pm) * sel;
      add_numeric(report, "rep", "casimir_commutator", "m=" + std::to_string(m) + " B+" + std::to_string(i),
                  max_abs(lp - rp), kCompositionTolerance);
      const SparseMatrix lm = (pm * bm - bm * pm) * sel;
      const SparseMatrix rm = bm * (diagonal(nm1) - pm) * sel;
      add_numeric(report, "rep", "casimir_commutator", "m=" + std::to_string(m) + " B-" + std::to_string(i),
                  max_abs(lm - rm), kCompositionTolerance);
    }
  }
  return report;
}

Report verify_casimcom_symbolic(unsigned m_max, std::uint32_t n) {
  Report report;
  const AlgebraContext& ctx = shared_context(ContextKind::Paraboson);
  Element number;
  for (std::uint32_t i = 1; i <= n; ++i)
    number += Element(Generator::e(i, Sign::Plus, i, Sign::Minus)) * Scalar::rational(1, 2);
  const Element up = number + Element::unit();
  const Element down = number - Element::unit();
  for (unsigned m = 0; m <= m_max; ++m) {
    const Element nm = power(number, m);
    for (std::uint32_t i = 1; i <= n; ++i) {
      const Element bp(Generator::b_plus(i));
      const Element bm(Generator::b_minus(i));
      const Element dp = normal_form(commutator(nm, bp) - bp * (power(up, m) - nm), ctx);
      report.add("pb", "casimir_commutator_symbolic", "m=" + std::to_string(m) + " B+" + std::to_string(i),
                 dp.is_zero(), dp.str(), "0");
      const Element dm = normal_form(commutator(nm, bm) - bm * (power(down, m) - nm), ctx);
      report.add("pb", "casimir_commutator_symbolic", "m=" + std::to_string(m) + " B-" + std::to_string(i),
                 dm.is_zero(), dm.str(), "0");
    }
  }
  return report;
}

Report verify_k_relations(const MatrixRep& rep) {
  Report report;
  const auto [kp, km] = k_matrices(rep);
  const std::size_t dim = rep.dimension();
  const SparseMatrix id = identity(dim);
  const SparseMatrix sel = rep.selector(1);
  const AlgebraContext& ctx = shared_context(ContextKind::ParabosonK);

  for (const auto& [k, kname] : {std::pair{kp, Generator::k_plus()}, std::pair{km, Generator::k_minus()}})
    for (std::uint32_t i = 1; i <= rep.spec().n; ++i)
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const Generator b = Generator::b(s, i);
        const SparseMatrix& bm = rep.letter(b);
        const std::string label = "{" + kname.str() + ", " + b.str() + "}";
        add_numeric(report, "rep", "k_anticommutes_with_b", label, max_abs((k * bm + bm * k) * sel),
                    kDirectTolerance);
        const Element sym = normal_form(anticommutator(Element(kname), Element(b)), ctx);
        report.add("pbk", "k_anticommutes_with_b_symbolic", label, sym.is_zero(), sym.str(), "0");
      }

  add_numeric(report, "rep", "k_inverse", "K+ K- - I", max_abs(kp * km - id), kUnitTolerance);
  add_numeric(report, "rep", "k_inverse", "K- K+ - I", max_abs(km * kp - id), kUnitTolerance);
  for (const auto& [w, label] : {std::pair{Word{Generator::k_plus(), Generator::k_minus()}, "K+ K- - I"},
                                 std::pair{Word{Generator::k_minus(), Generator::k_plus()}, "K- K+ - I"}}) {
    const Element sym = normal_form(Element(w) - Element::unit(), ctx);
    report.add("pbk", "k_inverse_symbolic", label, sym.is_zero(), sym.str(), "0");
  }

  // K+^2 = exp(2 i pi N) = (-1)^(np) on every state.
  const long np = static_cast<long>(rep.spec().n) * rep.spec().p;
  std::vector<Complex> expected(dim, np % 2 ? Complex{-1, 0} : Complex{1, 0});
  const SparseMatrix square = kp * kp;
  add_numeric(report, "rep", "k_plus_squared", "K+^2 - exp(2 i pi N)", max_abs(square - diagonal(expected)),
              kUnitTolerance);
  const bool is_identity = max_abs(square - id) <= kUnitTolerance;
  report.add("rep", "k_plus_squared_is_identity", "np=" + std::to_string(np), is_identity == (np % 2 == 0),
             is_identity ? "identity" : "not identity", np % 2 == 0 ? "identity" : "not identity");
  return report;
}

Report verify_g_relations(const MatrixRep& rep) {
  Report report;
  for (const auto& rel : g_relations(rep.spec().n))
    add_numeric(report, "rep", "g_relation", rel.label, max_abs(represent(rel.element, rep)), kDirectTolerance);
  return report;
}

Report tensor_rep_via_coproduct(const MatrixRep& rep, ContextKind ctx, std::size_t max_square_dimension) {
  if (ctx != ContextKind::ParabosonG && ctx != ContextKind::ParabosonK)
    throw std::invalid_argument("tensor representation needs pbg or pbk");
  const std::string name(context_name(ctx));
  const std::uint32_t max_index = std::min<std::uint32_t>(rep.spec().n, 2);
  std::vector<Relation> relations = paraboson_relations(max_index);
  const auto extra = ctx == ContextKind::ParabosonG ? g_relations(max_index) : k_relations(max_index);
  relations.insert(relations.end(), extra.begin(), extra.end());

  Report report;
  const std::size_t dim = rep.dimension();
  if (dim > max_square_dimension / dim) {
    for (const auto& rel : relations)
      report.add({name, "tensor_square_relation", rel.label, Status::Skip, "dimension " + std::to_string(dim * dim),
                  "cap " + std::to_string(max_square_dimension)});
    return report;
  }

  std::unordered_map<Generator, SparseMatrix> images;
  for (const auto& x : context_alphabet(ctx, max_index)) {
    const TensorElement d = ctx == ContextKind::ParabosonG ? smash_coproduct(Element(x)) : k_coproduct(Element(x));
    SparseMatrix m(static_cast<Eigen::Index>(dim * dim), static_cast<Eigen::Index>(dim * dim));
    for (const auto& [key, c] : d.terms())
      m += kron(represent_unguarded(Element(key[0]), rep), represent_unguarded(Element(key[1]), rep)) *
           c.to_complex();
    images.emplace(x, std::move(m));
  }
  auto letter = [&](const Generator& x) -> const SparseMatrix& { return images.at(x); };

  for (const auto& rel : relations) {
    const auto& states = rep.guarded_states(weighted_length(rel.element));
    SparseMatrix sel(static_cast<Eigen::Index>(dim * dim), static_cast<Eigen::Index>(states.size() * states.size()));
    std::vector<Triplet> t;
    for (std::size_t a = 0; a < states.size(); ++a)
      for (std::size_t b = 0; b < states.size(); ++b)
        t.emplace_back(states[a] * dim + states[b], a * states.size() + b, Complex{1, 0});
    sel.setFromTriplets(t.begin(), t.end());
    add_numeric(report, name, "tensor_square_relation", rel.label, max_abs(apply_element(rel.element, letter, sel)),
                kCompositionTolerance);
  }
  return report;
}

Report oracle_agreement(const MatrixRep& rep, ContextKind ctx, std::size_t samples, std::size_t max_len,
                        std::mt19937_64& rng) {
  const std::string name(context_name(ctx));
  const AlgebraContext& context = shared_context(ctx);
  const auto alphabet = context_alphabet(ctx, std::min<std::uint32_t>(rep.spec().n, 2));
  const std::size_t len = std::min<std::size_t>(max_len, rep.spec().cutoff);
  Report report;
  for (std::size_t k = 0; k < samples; ++k) {
    const Word w = random_word(rng, alphabet, len);
    const Element nf = context.reduce(w);
    add_numeric(report, name, "oracle_agreement", w.str(), guarded_residual(Element(w), nf, rep),
                kCompositionTolerance);
  }
  return report;
}

Report run_oracle_suite(const OracleConfig& config, std::size_t dim_cap) {
  const MatrixRep rep = build_green_ansatz(config.spec, dim_cap);
  Report report;
  report.append(verify_paraboson_relations(rep));
  report.append(verify_hermiticity(rep));
  if (config.spec.p == 1) report.append(verify_boson_degeneration(rep));
  report.append(verify_number_operator(rep));
  report.append(verify_casimcom(rep, config.casimir_mmax));
  if (config.spec.n <= 2) report.append(verify_casimcom_symbolic(std::min(config.casimir_mmax, 3u), config.spec.n));
  report.append(verify_k_relations(rep));
  report.append(verify_g_relations(rep));
  report.append(tensor_rep_via_coproduct(rep, ContextKind::ParabosonG));
  report.append(tensor_rep_via_coproduct(rep, ContextKind::ParabosonK));
  std::mt19937_64 rng(config.seed);
  for (ContextKind ctx : {ContextKind::Paraboson, ContextKind::ParabosonG, ContextKind::ParabosonK})
    report.append(oracle_agreement(rep, ctx, config.samples, config.max_len, rng));
  return report;
}

nlohmann::ordered_json matrix_to_json(const SparseMatrix& m) {
  const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> dense(m);
  nlohmann::ordered_json out;
  out["rows"] = dense.rows();
  out["cols"] = dense.cols();
  auto data = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < dense.cols(); ++c) row.push_back({dense(r, c).real(), dense(r, c).imag()});
    data.push_back(std::move(row));
  }
  out["data"] = std::move(data);
  return out;
}

}  // namespace parabose
