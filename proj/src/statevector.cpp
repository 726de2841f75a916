#include "rqae/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace rqae {

Gate2 hadamard_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, r, r, -r};
}

Gate2 ry_gate(double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  return {c, -s, s, c};
}

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 20) {
    throw std::invalid_argument("statevector: qubit count must lie in [1, 20]");
  }
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void Statevector::apply(int target, const Gate2& g) {
  if (target < 0 || target >= n_qubits_) {
    throw std::invalid_argument("statevector: target qubit out of range");
  }
  const std::size_t bit = std::size_t{1} << target;
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & bit) continue;
    const auto a0 = amps_[base];
    const auto a1 = amps_[base | bit];
    amps_[base] = g[0] * a0 + g[1] * a1;
    amps_[base | bit] = g[2] * a0 + g[3] * a1;
  }
}

void Statevector::apply_controlled(int control, bool control_value, int target,
                                   const Gate2& g) {
  if (control < 0 || control >= n_qubits_ || target < 0 || target >= n_qubits_ ||
      control == target) {
    throw std::invalid_argument("statevector: bad control/target qubits");
  }
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & tbit) continue;
    if (static_cast<bool>(base & cbit) != control_value) continue;
    const auto a0 = amps_[base];
    const auto a1 = amps_[base | tbit];
    amps_[base] = g[0] * a0 + g[1] * a1;
    amps_[base | tbit] = g[2] * a0 + g[3] * a1;
  }
}

void Statevector::reflect_about_basis(std::size_t basis) {
  if (basis >= amps_.size()) {
    throw std::invalid_argument("statevector: basis index out of range");
  }
  amps_[basis] = -amps_[basis];
}

void Statevector::negate() {
  for (auto& a : amps_) a = -a;
}

}  // namespace rqae
