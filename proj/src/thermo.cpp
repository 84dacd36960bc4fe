#include "liecat/thermo.hpp"

#include <cmath>

#include "liecat/errors.hpp"
#include "liecat/text_format.hpp"

namespace liecat::thermo {

namespace {
constexpr double kSumTol = 1e-12;
constexpr double kObjectMargin = 1e-12;
}  // namespace

Configuration::Configuration(Vector p) : p_(std::move(p)) {
  if (p_.size() < 2)
    throw Error(ErrorKind::InvalidConfiguration, "a configuration needs at least two microstates");
  if (!p_.allFinite()) throw Error(ErrorKind::InvalidConfiguration, "configuration has non-finite entries");
  if (p_.minCoeff() < 0.0) throw Error(ErrorKind::InvalidConfiguration, "configuration has negative entries");
  if (std::abs(p_.sum() - 1.0) > kSumTol)
    throw Error(ErrorKind::InvalidConfiguration, "configuration does not sum to 1");
}

Configuration Configuration::from_chart(const Vector& chart) {
  Vector p(chart.size() + 1);
  p(0) = 1.0 - chart.sum();
  p.tail(chart.size()) = chart;
  return Configuration(std::move(p));
}

void EnergyModel::validate() const {
  if (energies.size() < 2) throw Error(ErrorKind::InvalidSpec, "energy model needs at least two microstates");
  if (!energies.allFinite()) throw Error(ErrorKind::InvalidSpec, "energies must be finite");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw Error(ErrorKind::InvalidSpec, "temperature must be finite and > 0");
  if (!(boltzmann > 0.0) || !std::isfinite(boltzmann))
    throw Error(ErrorKind::InvalidSpec, "boltzmann constant must be finite and > 0");
}

double entropy(const Configuration& p) {
  double s = 0.0;
  for (const double pi : p.p())
    if (pi > 0.0) s -= pi * std::log(pi);
  return s;
}

double delta_S(const Configuration& q, const Configuration& p) {
  if (q.n() != p.n())
    throw Error(ErrorKind::DimensionMismatch, "configurations live on simplices of different dimension");
  return entropy(q) - entropy(p);
}

bool is_feasible(const Configuration& q, const Configuration& p, double slack) {
  return delta_S(q, p) >= -slack;
}

Configuration microcanonical(int n) {
  if (n < 1) throw Error(ErrorKind::BadDimension, "simplex dimension must be at least 1");
  return Configuration(Vector::Constant(n + 1, 1.0 / (n + 1)));
}

Vector entropy_gradient(const Configuration& p) {
  if (p.p().minCoeff() <= 0.0)
    throw Error(ErrorKind::BoundaryConfiguration, "entropy is not differentiable on the simplex boundary");
  const double log_p0 = std::log(p.p()(0));
  Vector grad(p.n());
  for (int i = 0; i < p.n(); ++i) grad(i) = -(std::log(p.p()(i + 1)) - log_p0);
  return grad;
}

GibbsSolution gibbs_equilibrium(const EnergyModel& model) {
  if (!model.energies.allFinite() || !std::isfinite(model.kT()))
    throw Error(ErrorKind::NonFinite, "energy model has non-finite entries");
  model.validate();
  const double kT = model.kT();
  const Vector reduced = model.energies / kT;
  const double shift = reduced.minCoeff();
  const Vector weights = (-(reduced.array() - shift)).exp().matrix();
  const double shifted_z = weights.sum();
  Vector p = weights / shifted_z;
  const double z = shifted_z * std::exp(-shift);
  if (!p.allFinite()) throw Error(ErrorKind::NonFinite, "Gibbs weights are not finite");
  return GibbsSolution{Configuration(std::move(p)), z, -1.0 / kT};
}

bool is_valid_object(const Vector& p, int n) {
  if (p.size() != n + 1 || n < 1 || !p.allFinite()) return false;
  if (p.minCoeff() <= kObjectMargin) return false;
  const double uniform = 1.0 / (n + 1);
  return (p.array() - uniform).abs().maxCoeff() > kObjectMargin;
}

bool can_reach(const Configuration& target, const Configuration& p) {
  if (!is_valid_object(target.p(), target.n()))
    throw Error(ErrorKind::InvalidConfiguration, "target is not a valid object");
  if (!is_valid_object(p.p(), p.n())) throw Error(ErrorKind::InvalidConfiguration, "start is not a valid object");
  return delta_S(target, p) >= 0.0;
}

EnergyModel parse_energy_model(const std::string& text) {
  const auto kv = text::parse_key_values(text);
  EnergyModel model;
  for (const auto& [key, value] : kv) {
    if (key == "energies")
      model.energies = text::parse_vector(value);
    else if (key == "temperature")
      model.temperature = text::parse_real(value);
    else if (key == "boltzmann")
      model.boltzmann = text::parse_real(value);
    else
      throw Error(ErrorKind::InvalidSpec, "unknown energy model key '" + key + "'");
  }
  if (!kv.contains("energies")) throw Error(ErrorKind::InvalidSpec, "energy model lacks 'energies'");
  if (!kv.contains("temperature")) throw Error(ErrorKind::InvalidSpec, "energy model lacks 'temperature'");
  model.validate();
  return model;
}

std::string write_energy_model(const EnergyModel& model) {
  return "energies = " + text::format_vector(model.energies) + "\n" +
         "temperature = " + text::format_real(model.temperature) + "\n" +
         "boltzmann = " + text::format_real(model.boltzmann) + "\n";
}

}  // namespace liecat::thermo
