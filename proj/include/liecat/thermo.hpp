#pragma once

#include <string>

#include "liecat/numerics.hpp"

namespace liecat::thermo {

/// Probability distribution over n+1 microstates.
class Configuration {
 public:
  /// Throws InvalidConfiguration unless entries are finite, non-negative and
  /// sum to 1 within 1e-12, with at least two entries.
  explicit Configuration(Vector p);

  const Vector& p() const { return p_; }
  /// Simplex dimension n (one less than the number of microstates).
  int n() const { return static_cast<int>(p_.size()) - 1; }

  /// Chart coordinates (p_1, ..., p_n).
  Vector chart() const { return p_.tail(p_.size() - 1); }
  static Configuration from_chart(const Vector& chart);

 private:
  Vector p_;
};

struct EnergyModel {
  Vector energies;
  double temperature = 1.0;
  double boltzmann = 1.0;

  double kT() const { return boltzmann * temperature; }
  /// Throws InvalidSpec for non-finite energies or non-positive T, k.
  void validate() const;
};

struct GibbsSolution {
  Configuration p_eq;
  double partition_function;
  double lambda1;
};

/// Shannon entropy in nats with 0 log 0 = 0.
double entropy(const Configuration& p);

/// S(q) - S(p); throws DimensionMismatch for different n.
double delta_S(const Configuration& q, const Configuration& p);

/// Second-law feasibility of the process p -> q.
bool is_feasible(const Configuration& q, const Configuration& p, double slack = 0.0);

/// Uniform configuration on n+1 states; throws BadDimension for n < 1.
Configuration microcanonical(int n);

/// Gradient of S in the chart (p_1..p_n): -(log p_i - log p_0).
/// Throws BoundaryConfiguration if some p_i is zero.
Vector entropy_gradient(const Configuration& p);

/// Closed-form Boltzmann distribution, shifted by min E_i/kT for overflow safety.
GibbsSolution gibbs_equilibrium(const EnergyModel& model);

/// Interior point of the simplex other than the microcanonical one
/// (margins 1e-12, infinity norm).
bool is_valid_object(const Vector& p, int n);

/// Whether target is reachable from p by a feasible process.
/// Throws InvalidConfiguration unless both are valid objects.
bool can_reach(const Configuration& target, const Configuration& p);

/// Energy model file: `energies`, `temperature`, optional `boltzmann`.
EnergyModel parse_energy_model(const std::string& text);
std::string write_energy_model(const EnergyModel& model);

}  // namespace liecat::thermo
