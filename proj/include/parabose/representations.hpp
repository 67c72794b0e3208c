#ifndef PARABOSE_REPRESENTATIONS_HPP
#define PARABOSE_REPRESENTATIONS_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>
#include <json.hpp>

#include "parabose/report.hpp"
#include "parabose/rewriting.hpp"

namespace parabose {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr double kDirectTolerance = 1e-10;
inline constexpr double kCompositionTolerance = 1e-9;
inline constexpr double kUnitTolerance = 1e-12;

class DimensionOverflow : public std::runtime_error {
 public:
  DimensionOverflow(std::size_t dimension, std::size_t cap);
  std::size_t dimension;
  std::size_t cap;
};

class UnrepresentableLetter : public std::invalid_argument {
 public:
  explicit UnrepresentableLetter(const Generator& letter, const std::string& why);
  Generator letter;
};

/// n modes, order p, per-component boson occupancy in [0, cutoff).
struct FockSpec {
  std::uint32_t n = 1;
  std::uint32_t p = 1;
  std::uint32_t cutoff = 6;

  /// Throws std::invalid_argument unless n, p >= 1 and cutoff >= 2.
  void validate() const;
  std::uint32_t clifford_qubits() const { return (p + 1) / 2; }
  /// 2^ceil(p/2) * cutoff^(n p), or 0 when it does not fit in 64 bits.
  std::size_t dimension() const;
};

/// Cap from PARABOSE_DIM_CAP when set to a positive integer, else 20000.
std::size_t default_dimension_cap();

/// Green-ansatz realization: B_i^s = sum_a gamma_a (x) a_(a,i)^s with
/// gamma_a mutually anticommuting Hermitian involutions on ceil(p/2) qubits.
/// Basis state index = clifford * cutoff^(np) + sum occ(a,i) cutoff^(a n + i).
class MatrixRep {
 public:
  const FockSpec& spec() const { return spec_; }
  std::size_t dimension() const { return dimension_; }

  /// Matrix of one letter on the full truncated space.
  const SparseMatrix& letter(const Generator& x) const;
  /// Occupancy of Green component `alpha` of mode `mode` (0-based) in `state`.
  std::uint32_t occupancy(std::size_t state, std::uint32_t alpha, std::uint32_t mode) const;
  std::uint32_t total_occupancy(std::size_t state) const;
  /// States whose every occupancy is <= cutoff - length, ascending.
  const std::vector<std::size_t>& guarded_states(std::size_t length) const;
  /// dimension x |guarded_states(length)| column selector.
  SparseMatrix selector(std::size_t length) const;

 private:
  friend MatrixRep build_green_ansatz(const FockSpec& spec, std::size_t dim_cap);
  FockSpec spec_;
  std::size_t dimension_ = 0;
  std::size_t boson_block_ = 0;
  std::unordered_map<Generator, SparseMatrix> letters_;
  std::vector<std::vector<std::size_t>> guarded_;
};

MatrixRep build_green_ansatz(const FockSpec& spec, std::size_t dim_cap = default_dimension_cap());

/// B letters count 1, E symbols 2, g and K 0: the number of ladder steps.
std::size_t weighted_length(const Word& w);
std::size_t weighted_length(const Element& a);

/// rep(a) restricted to the columns guarded for `guard_length`.
SparseMatrix represent(const Element& a, const MatrixRep& rep, std::size_t guard_length);
/// rep(a) restricted to the columns guarded for weighted_length(a).
SparseMatrix represent(const Element& a, const MatrixRep& rep);
/// rep(a) on the full truncated space (no guard).
SparseMatrix represent_unguarded(const Element& a, const MatrixRep& rep);

double max_abs(const SparseMatrix& m);
/// max |rep(a) - rep(b)| over columns guarded for the longer of the two.
double guarded_residual(const Element& a, const Element& b, const MatrixRep& rep);

/// (1/2) sum_i {B_i^+, B_i^-}, realized exactly as diag(occupancy + np/2).
SparseMatrix number_operator(const MatrixRep& rep);
/// exp(+-i pi N), diagonal.
std::pair<SparseMatrix, SparseMatrix> k_matrices(const MatrixRep& rep);
/// exp(i pi (N - np/2)) = (-1)^occupancy, diagonal.
SparseMatrix g_matrix(const MatrixRep& rep);

/// Every paraboson relation with indices <= min(n, 3) maps to zero (1e-10).
Report verify_paraboson_relations(const MatrixRep& rep);
/// B_i^+ equals the adjoint of B_i^- on guarded columns.
Report verify_hermiticity(const MatrixRep& rep);
/// p = 1 only: every boson relation maps to zero (1e-10).
Report verify_boson_degeneration(const MatrixRep& rep);
/// N is diagonal, agrees with (1/2) sum {B+,B-} on guarded columns, has
/// vacuum eigenvalue np/2 and satisfies [N, B_i^+-] = +-B_i^+-.
Report verify_number_operator(const MatrixRep& rep);
/// [N^m, B_i^+] = B_i^+((N+1)^m - N^m) for m = 0..m_max, 1e-9.
Report verify_casimcom(const MatrixRep& rep, unsigned m_max);
/// The same identity (and its B^- mirror) with N = (1/2) sum E(i+,i-),
/// reduced exactly in the paraboson context.
Report verify_casimcom_symbolic(unsigned m_max, std::uint32_t n);
/// {K^s, B_i^t} = 0 (1e-10), K+K- = K-K+ = 1 (1e-12), K+^2 = exp(2 i pi N)
/// with a record of whether it is the identity, plus the exact pbk
/// reductions of the same expressions.
Report verify_k_relations(const MatrixRep& rep);
/// g^2 = 1 and {g, B} = 0 (1e-10).
Report verify_g_relations(const MatrixRep& rep);
/// rho2 = (rho (x) rho) o D on the guarded tensor square for ctx in
/// {ParabosonG, ParabosonK}; every defining relation must map to zero (1e-9).
/// Entries are marked skipped when dimension^2 exceeds `max_square_dimension`.
Report tensor_rep_via_coproduct(const MatrixRep& rep, ContextKind ctx,
                                std::size_t max_square_dimension = 300000);
/// rep(w) == rep(normal_form(w)) (1e-9) on `samples` random words of length
/// <= max_len over the context alphabet with indices <= min(n, 2).
Report oracle_agreement(const MatrixRep& rep, ContextKind ctx, std::size_t samples, std::size_t max_len,
                        std::mt19937_64& rng);

struct OracleConfig {
  FockSpec spec;
  std::uint64_t seed = 0;
  unsigned casimir_mmax = 3;
  std::size_t samples = 500;
  std::size_t max_len = 5;
};

/// Everything above for one Fock spec. Throws DimensionOverflow.
Report run_oracle_suite(const OracleConfig& config, std::size_t dim_cap = default_dimension_cap());

/// {"rows", "cols", "data"} with data a row-major array of [re, im] rows.
nlohmann::ordered_json matrix_to_json(const SparseMatrix& m);

}  // namespace parabose

#endif
