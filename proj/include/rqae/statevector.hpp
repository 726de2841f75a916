#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace rqae {

using Gate2 = std::array<std::complex<double>, 4>;  // row-major 2x2

Gate2 hadamard_gate();
Gate2 ry_gate(double angle);  // rotation about Y by `angle` (half-angle convention)

// Dense complex state over n qubits; qubit i is bit i of the basis index.
class Statevector {
 public:
  explicit Statevector(int n_qubits);  // initialized to |0...0>

  int qubit_count() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::complex<double> amplitude(std::size_t basis) const { return amps_[basis]; }
  double probability(std::size_t basis) const { return std::norm(amps_[basis]); }
  double norm_squared() const;

  void apply(int target, const Gate2& gate);
  void apply_controlled(int control, bool control_value, int target, const Gate2& gate);
  void reflect_about_basis(std::size_t basis);  // 1 - 2|basis><basis|
  void negate();                                // global phase flip

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace rqae
