#pragma once

#include <cstdint>

#include "rqae/random.hpp"

namespace rqae {

// Measurement oracle. Answers (shift, amplification, shots) requests with a
// hit count for the marked state; the amplitude it hides is only exposed for
// validation, never consumed by the estimation loop.
//
// Backends are immutable after construction; the RandomStream is owned by the
// caller per run, so independent runs can execute concurrently.
class OracleBackend {
 public:
  virtual ~OracleBackend() = default;

  // Born probability of the marked state under `shift` after `amplification`
  // Grover applications.
  virtual double exact_probability(double shift, int amplification) const = 0;

  // Samples `shots` measurements, returns the number of marked outcomes.
  virtual std::int64_t measure(double shift, int amplification, std::int64_t shots,
                               RandomStream& rng) const;

  // Amplitude the estimation loop converges to.
  virtual double effective_amplitude() const = 0;

  // Factor mapping estimates back to the amplitude encoded at construction.
  virtual double amplitude_scale() const = 0;
};

// Samples the closed-form probability law directly, without circuits.
class AnalyticBackend final : public OracleBackend {
 public:
  explicit AnalyticBackend(double amplitude);

  double exact_probability(double shift, int amplification) const override;
  double effective_amplitude() const override { return amplitude_; }
  double amplitude_scale() const override { return 1.0; }

 private:
  double amplitude_;
};

}  // namespace rqae
