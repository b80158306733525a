#pragma once

// Dense state-vector simulator over mixed-radix register layouts. Provides
// the gates the circuits need: QFT_d, arbitrary per-register unitaries, the
// diagonal phase D(phi), the zero reflection S'_0(phi), basis permutations,
// and measurement.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "mmq/errors.hpp"
#include "mmq/ledger.hpp"

namespace mmq {

using Complex = std::complex<double>;

/// Squared-norm drift allowed after any gate, and the tolerance for algebraic
/// identity checks.
inline constexpr double kAlgebraTolerance = 1e-12;

/// Tolerance for end-to-end "with certainty" success probabilities, allowing
/// accumulated rounding over O(sqrt(k)) iterations.
inline constexpr double kSuccessTolerance = 1e-9;

/// An ordered list of register dimensions with row-major strides: the basis
/// index of digit tuple (d_0, ..., d_{r-1}) is sum_i d_i * stride_i with
/// stride_i = prod_{j > i} dims_j.
class RegisterLayout {
 public:
  static constexpr std::size_t kDefaultAmplitudeCap = std::size_t{1} << 24;

  /// Configurable cap applied by every layout construction; the CLI surfaces
  /// it as --max-dim. Set once at startup.
  static void set_default_amplitude_cap(std::size_t cap);
  static std::size_t default_amplitude_cap();

  explicit RegisterLayout(std::vector<int> dims);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int num_registers() const noexcept { return static_cast<int>(dims_.size()); }
  int dim(int reg) const { return dims_.at(static_cast<std::size_t>(reg)); }
  std::size_t size() const noexcept { return size_; }
  std::size_t stride(int reg) const { return strides_.at(static_cast<std::size_t>(reg)); }

  std::size_t index_of(std::span<const int> digits) const;
  std::vector<int> digits_of(std::size_t index) const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&);

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Complex amplitudes over a layout. Squared norm stays within 1e-12 of 1
/// after every gate; each gate application verifies this.
class StateVector {
 public:
  StateVector(RegisterLayout layout, std::span<const int> digits);

  const RegisterLayout& layout() const noexcept { return layout_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
  std::vector<Complex>& mutable_amplitudes() noexcept { return amps_; }
  Complex amplitude(std::span<const int> digits) const;
  double norm_squared() const;

  /// Throws std::logic_error when the squared norm drifted beyond 1e-12.
  void check_norm() const;

 private:
  RegisterLayout layout_;
  std::vector<Complex> amps_;
};

/// A classical bijection on basis digit tuples, mutating the tuple in place.
using BasisPermutation = std::function<void(std::vector<int>&)>;

/// Amplitude 1 at the given basis tuple, 0 elsewhere.
StateVector init_basis_state(RegisterLayout layout, std::span<const int> digits);

/// QFT_d on one register: |l> -> (1/sqrt d) sum_j omega^{lj} |j> with
/// omega = e^{2 pi i / d}; the conjugate transform when inverse is set.
void apply_qft(StateVector& state, int register_index, bool inverse = false);

/// Applies a dense d x d unitary (row-major) to one register. The matrix is
/// rejected unless it is unitary within 1e-10.
void apply_single_register_unitary(StateVector& state, int register_index,
                                   std::span<const Complex> matrix);

/// D(phi): multiplies the amplitude of each basis state by e^{i j phi} where
/// j is the digit of the given register.
void apply_diagonal_phase_on_value(StateVector& state, int register_index, double phi);

/// S'_0(phi) = QFT_d (I + (e^{i phi} - 1)|0><0|) QFT_d^dagger on one register.
void apply_zero_reflection(StateVector& state, int register_index, double phi);

/// Permutes amplitudes by the basis bijection f; charges the ledger (when one
/// is attached) with the given amounts. f is trusted to be a bijection; use
/// is_basis_permutation to check a candidate in tests.
void apply_permutation_oracle(StateVector& state, const BasisPermutation& f,
                              QueryLedger* ledger = nullptr, std::span<const Charge> charges = {});

/// Exhaustively checks that f maps the basis onto itself. Rejected for
/// layouts above 2^14 amplitudes.
bool is_basis_permutation(const BasisPermutation& f, const RegisterLayout& layout);

/// Sum of |amplitude|^2 over all completions of the leading digits.
double peek_probability(const StateVector& state, std::span<const int> digits_prefix);

/// The most probable assignment of the leading `prefix_registers` registers
/// and its marginal probability.
std::pair<std::vector<int>, double> argmax_prefix_marginal(const StateVector& state,
                                                           int prefix_registers);

/// Samples a full basis tuple by the Born rule.
std::vector<int> measure_all(const StateVector& state, std::mt19937_64& rng);

/// True when a == c * b for some unit scalar c, within tolerance per entry.
bool approx_equal_up_to_global_phase(std::span<const Complex> a, std::span<const Complex> b,
                                     double tolerance = kAlgebraTolerance);

/// Dense QFT_d matrix (row-major), or its inverse.
std::vector<Complex> qft_matrix(int d, bool inverse = false);

/// Dense H^{tensor m} on a 2^m-dimensional register: entries
/// (1/sqrt(2^m)) (-1)^{popcount(row AND col)}. The register's integer value
/// reads the leftmost qubit as most significant.
std::vector<Complex> hadamard_power_matrix(int m);

/// Kronecker product of a (da x da) and b (db x db), row-major.
std::vector<Complex> tensor_product(std::span<const Complex> a, int da, std::span<const Complex> b,
                                    int db);

/// Exact-Grover parameters for target proportion 1/k:
///   theta = arcsin(sqrt(1/k)),
///   T     = ceil(pi / (4 theta) - 1/2),
///   phi   = 2 arcsin(sin(pi / (4T + 2)) / sin(theta)).
struct GroverParams {
  double theta = 0.0;
  long long iterations = 0;
  double phi = 0.0;
};

GroverParams grover_params(int k);

}  // namespace mmq
