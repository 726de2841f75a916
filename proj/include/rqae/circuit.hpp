#pragma once

#include <cstddef>

#include "rqae/backend.hpp"
#include "rqae/statevector.hpp"

namespace rqae {

// State-preparation circuit encoding half the base amplitude plus a tunable
// shift on the all-zeros state, via one auxiliary qubit: Hadamard on the
// auxiliary, controlled base rotation, anti-controlled shift rotation,
// Hadamard. The base rotation acts on qubit 0; the remaining main-register
// qubits are spectators.
class ShiftedOracleCircuit {
 public:
  ShiftedOracleCircuit(double base_amplitude, double shift, int total_qubits);

  double base_amplitude() const { return base_amplitude_; }
  double shift() const { return shift_; }
  double shift_angle() const { return shift_angle_; }  // arccos(2 * shift)
  int qubit_count() const { return qubits_; }

  // Basis index carrying amplitude (base + cos(shift_angle)) / 2. It
  // coincides with the all-zeros preparation input in this construction.
  static constexpr std::size_t marked_index() { return 0; }
  // Basis index carrying amplitude (-base + cos(shift_angle)) / 2.
  std::size_t mirror_index() const { return std::size_t{1} << (qubits_ - 1); }

  Statevector prepare() const;  // circuit applied to |0...0>
  void apply(Statevector& state) const;
  void apply_inverse(Statevector& state) const;

  // One Grover application: reflect about the marked state, undo the
  // preparation, reflect about |0...0>, re-prepare, flip the global phase.
  void apply_grover_once(Statevector& state) const;

 private:
  double base_amplitude_;
  double shift_;
  double shift_angle_;
  int qubits_;
};

// Validates |shift| <= 1/2 and |base_amplitude| <= 1.
ShiftedOracleCircuit build_shifted_oracle(double base_amplitude, double shift,
                                          int total_qubits = 5);

Statevector apply_grover(const ShiftedOracleCircuit& circuit, Statevector state,
                         int amplification);

// Simulates the shifted oracle on a statevector. The construction halves the
// encoded amplitude, so the loop estimates base/2 and callers rescale by 2.
class CircuitBackend final : public OracleBackend {
 public:
  explicit CircuitBackend(double base_amplitude, int total_qubits = 5);

  double exact_probability(double shift, int amplification) const override;
  double effective_amplitude() const override { return 0.5 * base_amplitude_; }
  double amplitude_scale() const override { return 2.0; }
  int qubit_count() const { return qubits_; }

 private:
  double base_amplitude_;
  int qubits_;
};

}  // namespace rqae
