#include "rqae/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace rqae {

ShiftedOracleCircuit::ShiftedOracleCircuit(double base_amplitude, double shift,
                                           int total_qubits)
    : base_amplitude_(base_amplitude), shift_(shift), qubits_(total_qubits) {
  if (!(std::abs(base_amplitude) <= 1.0)) {
    throw std::invalid_argument("shifted oracle: |base amplitude| must not exceed 1");
  }
  if (!(std::abs(shift) <= 0.5)) {
    throw std::invalid_argument("shifted oracle: |shift| must not exceed 1/2");
  }
  if (total_qubits < 2 || total_qubits > 20) {
    throw std::invalid_argument("shifted oracle: qubit count must lie in [2, 20]");
  }
  shift_angle_ = std::acos(2.0 * shift);
}

Statevector ShiftedOracleCircuit::prepare() const {
  Statevector state(qubits_);
  apply(state);
  return state;
}

void ShiftedOracleCircuit::apply(Statevector& state) const {
  if (state.qubit_count() != qubits_) {
    throw std::invalid_argument("shifted oracle: statevector size mismatch");
  }
  const int aux = qubits_ - 1;
  state.apply(aux, hadamard_gate());
  state.apply_controlled(aux, true, 0, ry_gate(2.0 * std::acos(base_amplitude_)));
  state.apply_controlled(aux, false, 0, ry_gate(2.0 * shift_angle_));
  state.apply(aux, hadamard_gate());
}

void ShiftedOracleCircuit::apply_inverse(Statevector& state) const {
  if (state.qubit_count() != qubits_) {
    throw std::invalid_argument("shifted oracle: statevector size mismatch");
  }
  const int aux = qubits_ - 1;
  state.apply(aux, hadamard_gate());
  state.apply_controlled(aux, false, 0, ry_gate(-2.0 * shift_angle_));
  state.apply_controlled(aux, true, 0, ry_gate(-2.0 * std::acos(base_amplitude_)));
  state.apply(aux, hadamard_gate());
}

void ShiftedOracleCircuit::apply_grover_once(Statevector& state) const {
  // The marked state and the preparation input are both the all-zeros index
  // here, so the two reflections act on the same amplitude.
  state.reflect_about_basis(marked_index());
  apply_inverse(state);
  state.reflect_about_basis(0);
  apply(state);
  state.negate();
}

ShiftedOracleCircuit build_shifted_oracle(double base_amplitude, double shift,
                                          int total_qubits) {
  return ShiftedOracleCircuit(base_amplitude, shift, total_qubits);
}

Statevector apply_grover(const ShiftedOracleCircuit& circuit, Statevector state,
                         int amplification) {
  if (amplification < 0) {
    throw std::invalid_argument("apply_grover: negative amplification");
  }
  if (state.qubit_count() != circuit.qubit_count()) {
    throw std::invalid_argument("apply_grover: statevector size mismatch");
  }
  for (int i = 0; i < amplification; ++i) {
    circuit.apply_grover_once(state);
  }
  return state;
}

CircuitBackend::CircuitBackend(double base_amplitude, int total_qubits)
    : base_amplitude_(base_amplitude), qubits_(total_qubits) {
  // Construction checks reused for early validation.
  ShiftedOracleCircuit probe(base_amplitude, 0.0, total_qubits);
  (void)probe;
}

double CircuitBackend::exact_probability(double shift, int amplification) const {
  if (amplification < 0) {
    throw std::invalid_argument("circuit backend: negative amplification");
  }
  const ShiftedOracleCircuit circuit(base_amplitude_, shift, qubits_);
  Statevector state = circuit.prepare();
  for (int i = 0; i < amplification; ++i) {
    circuit.apply_grover_once(state);
  }
  return state.probability(ShiftedOracleCircuit::marked_index());
}

}  // namespace rqae
