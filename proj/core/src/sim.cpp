#include "mmq/sim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmq {
namespace {

std::atomic<std::size_t> g_amplitude_cap{RegisterLayout::kDefaultAmplitudeCap};

void advance_digits(std::vector<int>& digits, const std::vector<int>& dims) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[static_cast<std::size_t>(i)] < dims[static_cast<std::size_t>(i)]) return;
    digits[static_cast<std::size_t>(i)] = 0;
  }
}

// Applies a dense d x d matrix to one register without a unitarity check.
void apply_matrix_unchecked(StateVector& state, int register_index,
                            std::span<const Complex> matrix) {
  const RegisterLayout& layout = state.layout();
  const int d = layout.dim(register_index);
  if (static_cast<std::size_t>(d) * d != matrix.size())
    throw ContractViolation("apply matrix: matrix shape does not match the register");
  const std::size_t stride = layout.stride(register_index);
  const std::size_t block = stride * static_cast<std::size_t>(d);
  std::vector<Complex>& amps = state.mutable_amplitudes();
  std::vector<Complex> in(static_cast<std::size_t>(d));
  for (std::size_t start = 0; start < amps.size(); start += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      for (int j = 0; j < d; ++j) in[static_cast<std::size_t>(j)] = amps[start + j * stride + offset];
      for (int r = 0; r < d; ++r) {
        Complex acc = 0.0;
        const Complex* row = matrix.data() + static_cast<std::size_t>(r) * d;
        for (int c = 0; c < d; ++c) acc += row[c] * in[static_cast<std::size_t>(c)];
        amps[start + r * stride + offset] = acc;
      }
    }
  }
  state.check_norm();
}

}  // namespace

void RegisterLayout::set_default_amplitude_cap(std::size_t cap) {
  if (cap < 2) throw ContractViolation("set_default_amplitude_cap: cap must be >= 2");
  g_amplitude_cap.store(cap);
}

std::size_t RegisterLayout::default_amplitude_cap() { return g_amplitude_cap.load(); }

RegisterLayout::RegisterLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ContractViolation("RegisterLayout: at least one register required");
  const std::size_t cap = default_amplitude_cap();
  for (int d : dims_) {
    if (d < 2) throw ContractViolation("RegisterLayout: register dimension must be >= 2");
    if (size_ > cap / static_cast<std::size_t>(d))
      throw DimensionCapExceeded("RegisterLayout: total dimension exceeds the amplitude cap");
    size_ *= static_cast<std::size_t>(d);
  }
  strides_.assign(dims_.size(), 1);
  for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i)
    strides_[static_cast<std::size_t>(i)] =
        strides_[static_cast<std::size_t>(i) + 1] *
        static_cast<std::size_t>(dims_[static_cast<std::size_t>(i) + 1]);
}

bool operator==(const RegisterLayout& a, const RegisterLayout& b) { return a.dims_ == b.dims_; }

std::size_t RegisterLayout::index_of(std::span<const int> digits) const {
  if (digits.size() != dims_.size())
    throw ContractViolation("index_of: digit count does not match the layout");
  std::size_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= dims_[i])
      throw ContractViolation("index_of: digit out of range");
    index += static_cast<std::size_t>(digits[i]) * strides_[i];
  }
  return index;
}

std::vector<int> RegisterLayout::digits_of(std::size_t index) const {
  if (index >= size_) throw ContractViolation("digits_of: index out of range");
  std::vector<int> digits(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    digits[i] = static_cast<int>((index / strides_[i]) % static_cast<std::size_t>(dims_[i]));
  }
  return digits;
}

StateVector::StateVector(RegisterLayout layout, std::span<const int> digits)
    : layout_(std::move(layout)), amps_(layout_.size(), Complex{0.0, 0.0}) {
  amps_[layout_.index_of(digits)] = Complex{1.0, 0.0};
}

Complex StateVector::amplitude(std::span<const int> digits) const {
  return amps_[layout_.index_of(digits)];
}

double StateVector::norm_squared() const {
  // Kahan summation: plain accumulation over ~1e5 amplitudes carries O(N eps)
  // rounding, which alone would trip the 1e-12 norm invariant.
  double total = 0.0;
  double comp = 0.0;
  for (const Complex& a : amps_) {
    const double y = std::norm(a) - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  return total;
}

void StateVector::check_norm() const {
  if (std::abs(norm_squared() - 1.0) > kAlgebraTolerance)
    throw std::logic_error("StateVector: squared norm drifted beyond 1e-12");
}

StateVector init_basis_state(RegisterLayout layout, std::span<const int> digits) {
  return StateVector(std::move(layout), digits);
}

void apply_qft(StateVector& state, int register_index, bool inverse) {
  const int d = state.layout().dim(register_index);
  apply_matrix_unchecked(state, register_index, qft_matrix(d, inverse));
}

void apply_single_register_unitary(StateVector& state, int register_index,
                                   std::span<const Complex> matrix) {
  const int d = state.layout().dim(register_index);
  if (static_cast<std::size_t>(d) * d != matrix.size())
    throw ContractViolation("apply_single_register_unitary: matrix shape mismatch");
  // Reject matrices that are not unitary within 1e-10: check M^dagger M = I.
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Complex acc = 0.0;
      for (int r = 0; r < d; ++r)
        acc += std::conj(matrix[static_cast<std::size_t>(r) * d + a]) *
               matrix[static_cast<std::size_t>(r) * d + b];
      const Complex expected = (a == b) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(acc - expected) > 1e-10)
        throw ContractViolation("apply_single_register_unitary: matrix is not unitary");
    }
  }
  apply_matrix_unchecked(state, register_index, matrix);
}

void apply_diagonal_phase_on_value(StateVector& state, int register_index, double phi) {
  const RegisterLayout& layout = state.layout();
  const int d = layout.dim(register_index);
  const std::size_t stride = layout.stride(register_index);
  std::vector<Complex> phases(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) phases[static_cast<std::size_t>(j)] = std::polar(1.0, phi * j);
  std::vector<Complex>& amps = state.mutable_amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx)
    amps[idx] *= phases[(idx / stride) % static_cast<std::size_t>(d)];
  state.check_norm();
}

void apply_zero_reflection(StateVector& state, int register_index, double phi) {
  const int d = state.layout().dim(register_index);
  // QFT (I + (e^{i phi} - 1)|0><0|) QFT^dagger = I + ((e^{i phi} - 1)/d) J
  // with J the all-ones matrix, since QFT|0> is the uniform state.
  const Complex off = (std::polar(1.0, phi) - Complex{1.0, 0.0}) / static_cast<double>(d);
  std::vector<Complex> matrix(static_cast<std::size_t>(d) * d, off);
  for (int j = 0; j < d; ++j) matrix[static_cast<std::size_t>(j) * d + j] += 1.0;
  apply_matrix_unchecked(state, register_index, matrix);
}

void apply_permutation_oracle(StateVector& state, const BasisPermutation& f, QueryLedger* ledger,
                              std::span<const Charge> charges) {
  const RegisterLayout& layout = state.layout();
  const std::vector<Complex>& in = state.amplitudes();
  std::vector<Complex> out(in.size(), Complex{0.0, 0.0});
  std::vector<int> digits(static_cast<std::size_t>(layout.num_registers()), 0);
  std::vector<int> mapped;
  for (std::size_t idx = 0; idx < in.size(); ++idx) {
    if (in[idx] != Complex{0.0, 0.0}) {
      mapped = digits;
      f(mapped);
      out[layout.index_of(mapped)] = in[idx];
    }
    advance_digits(digits, layout.dims());
  }
  state.mutable_amplitudes() = std::move(out);
  if (ledger != nullptr)
    for (const Charge& charge : charges) ledger->add(charge.kind, charge.amount);
  state.check_norm();
}

bool is_basis_permutation(const BasisPermutation& f, const RegisterLayout& layout) {
  if (layout.size() > (std::size_t{1} << 14))
    throw ContractViolation("is_basis_permutation: layout above 2^14 amplitudes");
  std::vector<std::uint8_t> seen(layout.size(), 0);
  std::vector<int> digits(static_cast<std::size_t>(layout.num_registers()), 0);
  std::vector<int> mapped;
  for (std::size_t idx = 0; idx < layout.size(); ++idx) {
    mapped = digits;
    f(mapped);
    if (mapped.size() != digits.size()) return false;
    for (std::size_t i = 0; i < mapped.size(); ++i)
      if (mapped[i] < 0 || mapped[i] >= layout.dims()[i]) return false;
    const std::size_t target = layout.index_of(mapped);
    if (seen[target]) return false;
    seen[target] = 1;
    advance_digits(digits, layout.dims());
  }
  return true;
}

double peek_probability(const StateVector& state, std::span<const int> digits_prefix) {
  const RegisterLayout& layout = state.layout();
  if (digits_prefix.size() > static_cast<std::size_t>(layout.num_registers()))
    throw ContractViolation("peek_probability: prefix longer than the layout");
  std::size_t base = 0;
  for (std::size_t i = 0; i < digits_prefix.size(); ++i) {
    if (digits_prefix[i] < 0 || digits_prefix[i] >= layout.dims()[i])
      throw ContractViolation("peek_probability: digit out of range");
    base += static_cast<std::size_t>(digits_prefix[i]) * layout.stride(static_cast<int>(i));
  }
  const std::size_t block =
      digits_prefix.empty() ? layout.size()
                            : (digits_prefix.size() == static_cast<std::size_t>(layout.num_registers())
                                   ? 1
                                   : layout.stride(static_cast<int>(digits_prefix.size()) - 1));
  double total = 0.0;
  for (std::size_t idx = base; idx < base + block; ++idx) total += std::norm(state.amplitudes()[idx]);
  return total;
}

std::pair<std::vector<int>, double> argmax_prefix_marginal(const StateVector& state,
                                                           int prefix_registers) {
  const RegisterLayout& layout = state.layout();
  if (prefix_registers < 1 || prefix_registers > layout.num_registers())
    throw ContractViolation("argmax_prefix_marginal: invalid register count");
  const std::size_t block = (prefix_registers == layout.num_registers())
                                ? 1
                                : layout.stride(prefix_registers - 1);
  const std::vector<Complex>& amps = state.amplitudes();
  std::size_t best_group = 0;
  double best_prob = -1.0;
  for (std::size_t base = 0; base < amps.size(); base += block) {
    double total = 0.0;
    for (std::size_t idx = base; idx < base + block; ++idx) total += std::norm(amps[idx]);
    if (total > best_prob) {
      best_prob = total;
      best_group = base;
    }
  }
  std::vector<int> digits = layout.digits_of(best_group);
  digits.resize(static_cast<std::size_t>(prefix_registers));
  return {std::move(digits), best_prob};
}

std::vector<int> measure_all(const StateVector& state, std::mt19937_64& rng) {
  const double total = state.norm_squared();
  if (total <= kAlgebraTolerance) throw ContractViolation("measure_all: zero-norm state");
  std::uniform_real_distribution<double> dist(0.0, total);
  const double u = dist(rng);
  double acc = 0.0;
  const std::vector<Complex>& amps = state.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    acc += std::norm(amps[idx]);
    if (u < acc) return state.layout().digits_of(idx);
  }
  return state.layout().digits_of(amps.size() - 1);
}

bool approx_equal_up_to_global_phase(std::span<const Complex> a, std::span<const Complex> b,
                                     double tolerance) {
  if (a.size() != b.size()) return false;
  std::size_t pivot = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > best) {
      best = std::abs(b[i]);
      pivot = i;
    }
  }
  if (best <= tolerance) {
    for (const Complex& v : a)
      if (std::abs(v) > tolerance) return false;
    return true;
  }
  const Complex ratio = a[pivot] / b[pivot];
  if (std::abs(std::abs(ratio) - 1.0) > tolerance) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - ratio * b[i]) > tolerance) return false;
  return true;
}

std::vector<Complex> qft_matrix(int d, bool inverse) {
  if (d < 2) throw ContractViolation("qft_matrix: dimension must be >= 2");
  const double sign = inverse ? -1.0 : 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> m(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m[static_cast<std::size_t>(r) * d + c] =
          scale * std::polar(1.0, sign * 2.0 * std::numbers::pi * r * c / d);
  return m;
}

std::vector<Complex> hadamard_power_matrix(int m) {
  if (m < 0) throw ContractViolation("hadamard_power_matrix: m must be >= 0");
  const std::size_t d = std::size_t{1} << m;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> matrix(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      matrix[r * d + c] = (std::popcount(r & c) % 2 == 0) ? scale : -scale;
  return matrix;
}

std::vector<Complex> tensor_product(std::span<const Complex> a, int da, std::span<const Complex> b,
                                    int db) {
  if (static_cast<std::size_t>(da) * da != a.size() ||
      static_cast<std::size_t>(db) * db != b.size())
    throw ContractViolation("tensor_product: matrix shape mismatch");
  const std::size_t d = static_cast<std::size_t>(da) * db;
  std::vector<Complex> out(d * d);
  for (int ar = 0; ar < da; ++ar)
    for (int br = 0; br < db; ++br)
      for (int ac = 0; ac < da; ++ac)
        for (int bc = 0; bc < db; ++bc)
          out[(static_cast<std::size_t>(ar) * db + br) * d + static_cast<std::size_t>(ac) * db + bc] =
              a[static_cast<std::size_t>(ar) * da + ac] * b[static_cast<std::size_t>(br) * db + bc];
  return out;
}

GroverParams grover_params(int k) {
  if (k < 2) throw ContractViolation("grover_params: k must be >= 2");
  GroverParams p;
  p.theta = std::asin(std::sqrt(1.0 / k));
  // Guard the exact-integer case (k = 4 gives exactly 1.0) against rounding
  // noise pushing ceil one step up.
  const double raw = std::numbers::pi / (4.0 * p.theta) - 0.5;
  p.iterations = static_cast<long long>(std::ceil(raw - 1e-12));
  if (p.iterations < 1) p.iterations = 1;
  double ratio = std::sin(std::numbers::pi / (4.0 * p.iterations + 2.0)) / std::sin(p.theta);
  // The exact ratio never exceeds 1; clip rounding spill so asin stays real.
  if (ratio > 1.0) ratio = 1.0;
  p.phi = 2.0 * std::asin(ratio);
  return p;
}

}  // namespace mmq
