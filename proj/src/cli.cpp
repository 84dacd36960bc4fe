#include "liecat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>

#include "liecat/categories.hpp"
#include "liecat/flows.hpp"
#include "liecat/ranks.hpp"
#include "liecat/spec_file.hpp"
#include "liecat/text_format.hpp"
#include "liecat/thermo.hpp"

namespace liecat::cli {
namespace {

struct Options {
  std::string spec_path;
  std::string energy_path;
  std::string g, h, morphism, object, vector, alpha, beta;
  std::string p, q, target, energies;
  std::string side = "left";
  double t = 1.0;
  double radius = 0.01;
  int samples = 100;
  std::optional<std::uint64_t> seed;
  std::optional<double> kT, temperature, boltzmann;
  double slack = 0.0;
  std::optional<double> rank_tol, fd_step;
  std::optional<int> ode_steps;
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void put(const std::string& key, const std::string& value) { out_ << key << '=' << value << '\n'; }
  void put(const std::string& key, double value) { put(key, text::format_real(value)); }
  void put(const std::string& key, int value) { put(key, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }
  void put(const std::string& key, const Vector& value) { put(key, text::format_vector(value)); }

 private:
  std::ostream& out_;
};

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing required flag ") + flag);
  return value;
}

ToleranceConfig tolerance_from(const Options& o) {
  ToleranceConfig tol;
  if (const char* env = std::getenv("LIECAT_TOL_RANK"); env && *env) tol.rank_rel_tol = text::parse_real(env);
  if (o.rank_tol) tol.rank_rel_tol = *o.rank_tol;
  if (o.fd_step) tol.fd_step = *o.fd_step;
  if (o.ode_steps) tol.ode_steps = *o.ode_steps;
  tol.validate();
  return tol;
}

Realization load_realization(const Options& o, const ToleranceConfig& tol) {
  const Realization parsed = parse_realization_spec(read_text_file(need(o.spec_path, "--spec")));
  return Realization(parsed.family(), tol);
}

// Entropy realizations accept full probability vectors as well as chart
// coordinates; everything else takes chart coordinates only.
Vector read_point(const Realization& c, const std::string& raw, const char* flag, int chart_size, int blocks) {
  Vector v = text::parse_vector(need(raw, flag));
  if (v.size() == chart_size) return v;
  if (const auto* ec = std::get_if<EntropyCategory>(&c.family()); ec && v.size() == blocks * (ec->n + 1)) {
    Vector chart(blocks * ec->n);
    for (int b = 0; b < blocks; ++b) chart.segment(b * ec->n, ec->n) = v.segment(b * (ec->n + 1) + 1, ec->n);
    return chart;
  }
  usage(std::string(flag) + " needs " + std::to_string(chart_size) + " values, got " + std::to_string(v.size()));
}

MorphismPoint read_morphism(const Realization& c, const std::string& raw, const char* flag) {
  return {read_point(c, raw, flag, c.dim_morphisms(), 2)};
}

ObjectPoint read_object(const Realization& c, const std::string& raw, const char* flag) {
  if (c.is_monoid() && raw.empty()) return {Vector(0)};
  return {read_point(c, raw, flag, c.dim_objects(), 1)};
}

Side read_side(const std::string& side) {
  if (side == "left") return Side::Left;
  if (side == "right") return Side::Right;
  usage("--side must be left or right");
}

SectionSpec read_section(const Realization& c, const std::string& raw, const char* flag) {
  SectionSpec s;
  s.coeffs = text::parse_vector(need(raw, flag));
  if (s.coeffs.size() != c.delta())
    usage(std::string(flag) + " needs " + std::to_string(c.delta()) + " values, got " + std::to_string(s.coeffs.size()));
  return s;
}

thermo::Configuration read_configuration(const std::string& raw, const char* flag) {
  return thermo::Configuration(text::parse_vector(need(raw, flag)));
}

std::optional<thermo::EnergyModel> read_energy_model(const Options& o) {
  if (!o.energy_path.empty()) return thermo::parse_energy_model(read_text_file(o.energy_path));
  if (o.energies.empty()) return std::nullopt;
  thermo::EnergyModel model;
  model.energies = text::parse_vector(o.energies);
  if (o.kT) {
    if (o.temperature || o.boltzmann) usage("--kT excludes --temperature/--boltzmann");
    model.temperature = *o.kT;
    model.boltzmann = 1.0;
  } else {
    if (!o.temperature) usage("gibbs needs --kT or --temperature");
    model.temperature = *o.temperature;
    model.boltzmann = o.boltzmann.value_or(1.0);
  }
  model.validate();
  return model;
}

void report_tolerance(Report& r, const ToleranceConfig& tol) {
  r.put("rank_rel_tol", tol.rank_rel_tol);
  r.put("fd_step", tol.fd_step);
  r.put("ode_steps", tol.ode_steps);
}

void execute(const std::string& verb, const Options& o, Report& r) {
  const ToleranceConfig tol = tolerance_from(o);

  if (verb == "entropy") {
    r.put("entropy", thermo::entropy(read_configuration(o.p, "--p")));
    return;
  }
  if (verb == "gibbs") {
    const auto model = read_energy_model(o);
    if (!model) usage("gibbs needs --energies or --energy-file");
    const auto sol = thermo::gibbs_equilibrium(*model);
    r.put("p", sol.p_eq.p());
    r.put("Z", sol.partition_function);
    r.put("lambda1", sol.lambda1);
    r.put("entropy", thermo::entropy(sol.p_eq));
    return;
  }
  if (verb == "feasible") {
    const auto q = read_configuration(o.q, "--q");
    const auto p = read_configuration(o.p, "--p");
    r.put("delta_S", thermo::delta_S(q, p));
    r.put("feasible", thermo::is_feasible(q, p, o.slack));
    return;
  }
  if (verb == "reachable") {
    const auto p = read_configuration(o.p, "--p");
    std::optional<thermo::Configuration> target;
    if (!o.target.empty()) {
      target = read_configuration(o.target, "--target");
    } else if (const auto model = read_energy_model(o)) {
      target = thermo::gibbs_equilibrium(*model).p_eq;
    } else {
      usage("reachable needs --target or an energy model");
    }
    r.put("target", target->p());
    r.put("reachable", thermo::can_reach(*target, p));
    return;
  }
  if (verb == "validate" && o.spec_path.empty()) {
    const auto model = read_energy_model(o);
    if (!model) usage("validate needs --spec or --energy-file");
    r.put("kind", std::string("energy_model"));
    r.put("microstates", static_cast<int>(model->energies.size()));
    r.put("kT", model->kT());
    r.put("valid", true);
    return;
  }

  const Realization c = load_realization(o, tol);
  if (verb == "validate") {
    r.put("family", c.family_name());
    r.put("dim_morphisms", c.dim_morphisms());
    r.put("dim_objects", c.dim_objects());
    r.put("delta", c.delta());
    r.put("valid", true);
  } else if (verb == "compose") {
    const auto g = read_morphism(c, o.g, "--g");
    const auto h = read_morphism(c, o.h, "--h");
    const auto gh = compose(c, g, h);
    r.put("result", gh.coords);
    r.put("source", c.source_coords(gh.coords));
    r.put("target", c.target_coords(gh.coords));
  } else if (verb == "rank") {
    const auto rep = rank_report(c, read_morphism(c, o.morphism, "--morphism"), tol);
    r.put("left_rank", rep.left_rank);
    r.put("right_rank", rep.right_rank);
    r.put("delta", rep.delta);
    r.put("regular", rep.regular);
    report_tolerance(r, tol);
  } else if (verb == "invertible") {
    r.put("invertible", is_invertible(c, read_morphism(c, o.morphism, "--morphism"), tol));
  } else if (verb == "core-probe") {
    if (!o.seed) usage("core-probe needs --seed");
    const auto g = read_morphism(c, o.morphism, "--morphism");
    r.put("fraction", core_probe(c, g, o.radius, o.samples, *o.seed, tol));
    r.put("samples", o.samples);
    r.put("radius", o.radius);
    r.put("seed", std::to_string(*o.seed));
    report_tolerance(r, tol);
  } else if (verb == "exp") {
    if (!c.is_monoid()) throw Error(ErrorKind::Unsupported, "exp needs a monoid family");
    const Vector v = read_point(c, o.vector, "--vector", c.dim_morphisms(), 1);
    r.put("element", exp_monoid(c, v, tol).coords);
    report_tolerance(r, tol);
  } else if (verb == "flow") {
    const auto alpha = read_section(c, o.alpha, "--alpha");
    const auto g = read_morphism(c, o.g, "--g");
    const auto res = flow_invariant(c, alpha, g, o.t, read_side(o.side), tol);
    r.put("endpoint", res.endpoint.coords);
    r.put("t_reached", res.t_reached);
    r.put("exited", res.exited);
    report_tolerance(r, tol);
  } else if (verb == "bracket") {
    const auto x = read_object(c, o.object, "--object");
    const auto alpha = read_section(c, o.alpha, "--alpha");
    const auto beta = read_section(c, o.beta, "--beta");
    r.put("bracket", bracket_at_unit(c, x, alpha, beta, read_side(o.side), tol));
    report_tolerance(r, tol);
  } else if (verb == "anchor") {
    const auto x = read_object(c, o.object, "--object");
    const Matrix a = anchor_matrix(c, x, read_side(o.side), tol);
    r.put("rows", static_cast<int>(a.rows()));
    r.put("cols", static_cast<int>(a.cols()));
    r.put("rank", numerics::numerical_rank(a, tol));
    r.put("matrix", Vector(Eigen::Map<const Vector>(Matrix(a.transpose()).data(), a.size())));
    report_tolerance(r, tol);
  } else {
    usage("unknown command '" + verb + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Computations on concrete Lie categories and Lie monoids", "liecat"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto add_spec = [&](CLI::App* s) { s->add_option("--spec", o.spec_path, "realization spec file"); };
  auto add_tol = [&](CLI::App* s) {
    s->add_option("--rank-tol", o.rank_tol, "relative singular-value cutoff");
    s->add_option("--fd-step", o.fd_step, "finite-difference step");
    s->add_option("--ode-steps", o.ode_steps, "RK4 steps per unit time");
  };
  auto add_energy = [&](CLI::App* s) {
    s->add_option("--energies", o.energies, "microstate energies, comma separated");
    s->add_option("--kT", o.kT, "product k*T");
    s->add_option("--temperature", o.temperature, "temperature T");
    s->add_option("--boltzmann", o.boltzmann, "Boltzmann constant k (default 1)");
    s->add_option("--energy-file", o.energy_path, "energy model file");
  };

  auto* compose_cmd = app.add_subcommand("compose", "compose two morphisms g after h");
  add_spec(compose_cmd);
  compose_cmd->add_option("--g", o.g);
  compose_cmd->add_option("--h", o.h);

  for (const char* name : {"rank", "invertible"}) {
    auto* s = app.add_subcommand(name, name == std::string("rank") ? "left/right ranks of a morphism"
                                                                     : "invertibility of a morphism");
    add_spec(s);
    add_tol(s);
    s->add_option("--morphism", o.morphism);
  }

  auto* core_cmd = app.add_subcommand("core-probe", "fraction of invertible morphisms near an invertible one");
  add_spec(core_cmd);
  add_tol(core_cmd);
  core_cmd->add_option("--morphism", o.morphism);
  core_cmd->add_option("--radius", o.radius);
  core_cmd->add_option("--samples", o.samples);
  core_cmd->add_option("--seed", o.seed);

  auto* exp_cmd = app.add_subcommand("exp", "exponential map of a monoid");
  add_spec(exp_cmd);
  add_tol(exp_cmd);
  exp_cmd->add_option("--vector", o.vector);

  auto* flow_cmd = app.add_subcommand("flow", "flow of an invariant vector field");
  add_spec(flow_cmd);
  add_tol(flow_cmd);
  flow_cmd->add_option("--alpha", o.alpha);
  flow_cmd->add_option("--g", o.g);
  flow_cmd->add_option("--t", o.t);
  flow_cmd->add_option("--side", o.side);

  auto* bracket_cmd = app.add_subcommand("bracket", "algebroid bracket at a unit");
  add_spec(bracket_cmd);
  add_tol(bracket_cmd);
  bracket_cmd->add_option("--object", o.object);
  bracket_cmd->add_option("--alpha", o.alpha);
  bracket_cmd->add_option("--beta", o.beta);
  bracket_cmd->add_option("--side", o.side);

  auto* anchor_cmd = app.add_subcommand("anchor", "anchor matrix at a unit");
  add_spec(anchor_cmd);
  add_tol(anchor_cmd);
  anchor_cmd->add_option("--object", o.object);
  anchor_cmd->add_option("--side", o.side);

  auto* entropy_cmd = app.add_subcommand("entropy", "entropy of a configuration");
  entropy_cmd->add_option("--p", o.p);

  auto* gibbs_cmd = app.add_subcommand("gibbs", "Gibbs equilibrium configuration");
  add_energy(gibbs_cmd);

  auto* feasible_cmd = app.add_subcommand("feasible", "second-law feasibility of p -> q");
  feasible_cmd->add_option("--q", o.q);
  feasible_cmd->add_option("--p", o.p);
  feasible_cmd->add_option("--slack", o.slack);

  auto* reach_cmd = app.add_subcommand("reachable", "whether a target configuration is reachable from p");
  reach_cmd->add_option("--p", o.p);
  reach_cmd->add_option("--target", o.target);
  add_energy(reach_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a spec or energy file");
  add_spec(validate_cmd);
  validate_cmd->add_option("--energy-file", o.energy_path);

  std::vector<std::string> storage{"liecat"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  Report report(out);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report.put("error", std::string("UsageError"));
    report.put("message", std::string(e.what()));
    return kValidationError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  std::ostringstream body;
  Report body_report(body);
  try {
    execute(verb, o, body_report);
  } catch (const Error& e) {
    report.put("error", std::string(to_string(e.kind())));
    report.put("message", std::string(e.what()));
    return is_validation_error(e.kind()) ? kValidationError : kDomainError;
  }
  out << body.str();
  return kOk;
}

}  // namespace liecat::cli
