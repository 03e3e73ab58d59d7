#include "rebit/cli.hpp"

#include "rebit/entanglement.hpp"
#include "rebit/hiding.hpp"
#include "rebit/io.hpp"
#include "rebit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace rebit {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string &text, const std::string &out_path, std::ostream &out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + out_path + "'");
}

SIndex require_s(const std::string &s, const char *family) {
  if (s.empty()) throw std::invalid_argument(std::string(family) + " requires --s (e.g. --s ++)");
  return SIndex::parse(s);
}

AnyState generate(const std::string &family, const std::string &s, const std::string &which) {
  if (family == "bell") return bell(parse_bell(which));
  if (family == "omega") return omega();
  if (family == "omega_prime") return omega_prime();
  if (family == "mu") return mu_state(require_s(s, "mu"));
  if (family == "nu") return nu_state(require_s(s, "nu"));
  if (family == "rho_s") return rho_s(require_s(s, "rho_s"));
  throw std::invalid_argument("unknown family '" + family + "' (expected bell|omega|omega_prime|mu|nu|rho_s)");
}

template <typename Scalar>
DensityMatrix<Scalar> as_density(const StateVector<Scalar> &s) {
  return DensityMatrix<Scalar>(s);
}
template <typename Scalar>
DensityMatrix<Scalar> as_density(const DensityMatrix<Scalar> &d) {
  return d;
}

std::string concurrence_lines(const AnyState &state, const std::string &field_override) {
  if (n_systems_of(state) != 2)
    throw std::invalid_argument("concurrence: expected a two-system state, got " +
                                std::to_string(n_systems_of(state)));
  const Field data_field = field_of(state);
  std::optional<Field> requested;
  if (!field_override.empty()) requested = parse_field(field_override);
  if (requested == Field::Real && data_field == Field::Complex)
    throw std::invalid_argument("concurrence: real-field measures are not defined on complex-tagged data");

  std::string out = "measure,value\n";
  std::visit(
      [&](const auto &s) {
        const auto rho = as_density(s);
        if constexpr (!is_complex_v<typename std::decay_t<decltype(rho)>::Scalar>) {
          if (!requested || requested == Field::Real) out += "C_R," + format_number(concurrence_real(rho)) + "\n";
        }
        if (!requested || requested == Field::Complex) out += "C," + format_number(concurrence_complex(rho)) + "\n";
      },
      state);
  return out;
}

RealDensity require_real_density(const AnyState &state, const char *what) {
  if (const auto *d = std::get_if<RealDensity>(&state)) return *d;
  if (const auto *v = std::get_if<RealState>(&state)) return RealDensity(*v);
  throw std::invalid_argument(std::string(what) + ": expected a real-tagged state");
}

/// The sign string whose rho_s equals `rho` within 1e-9.
SIndex identify_secret(const RealDensity &rho) {
  if (rho.n_systems() < 2) throw std::invalid_argument("hide: state must have at least two rebits");
  for (const auto &s : SIndex::all(rho.n_systems()))
    if ((rho_s(s).matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-9) return s;
  throw std::invalid_argument("hide: state is not a member of the rho_s family");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Entanglement measures and protocols for real- and complex-vector-space two-level systems"};
  app.name("rebit");
  app.require_subcommand(1);

  std::string family, s, which = "phi+", out_path, in_path, field_override, suite, strategy = "computational";
  std::optional<int> n, trials, hub;
  std::uint64_t seed = 7;

  auto *gen = app.add_subcommand("generate", "Write a named state as a state file");
  gen->add_option("family", family, "bell|omega|omega_prime|mu|nu|rho_s")->required();
  gen->add_option("--s", s, "Sign string such as +-+");
  gen->add_option("--which", which, "Bell state: phi+|phi-|psi+|psi-");
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto *conc = app.add_subcommand("concurrence", "Concurrence of a two-system state file");
  conc->add_option("input", in_path, "State file")->required();
  conc->add_option("--field", field_override, "Restrict to the real or complex measure");

  auto *ver = app.add_subcommand("verify", "Run a verification suite and print a CSV report");
  ver->add_option("suite", suite, "states|factorization|monogamy|oracle|hiding|coins|all")->required();
  ver->add_option("--n", n, "Number of systems");
  ver->add_option("--seed", seed, "Root seed");
  ver->add_option("--trials", trials, "Trials / corpus size");
  ver->add_option("--out", out_path, "Output path (default stdout)");

  auto *mono = app.add_subcommand("monogamy", "Monogamy sum for a pure state, or a Haar-random sweep");
  mono->add_option("input", in_path, "Pure complex state file; omit for a Haar-random sweep");
  mono->add_option("--hub", hub, "Hub system (default: every system)");
  mono->add_option("--field", field_override, "Use 'complex' to analyse real-tagged data in the complex theory");
  mono->add_option("--n", n, "Systems per random state");
  mono->add_option("--trials", trials, "Random states");
  mono->add_option("--seed", seed, "Root seed");
  mono->add_option("--out", out_path, "Output path (default stdout)");

  auto *hide = app.add_subcommand("hide", "Data-hiding protocol");
  hide->require_subcommand(1);
  auto *enc = hide->add_subcommand("encode", "Encode a sign string into rho_s");
  enc->add_option("--s", s, "Secret sign string")->required();
  enc->add_option("--out", out_path, "Output path (default stdout)");
  auto *att = hide->add_subcommand("attack", "Sample local measurements on a hidden record");
  att->add_option("input", in_path, "State file holding a rho_s record");
  att->add_option("--s", s, "Secret to encode instead of reading a file");
  att->add_option("--strategy", strategy, "computational|random");
  att->add_option("--trials", trials, "Number of trials (default 1000)");
  att->add_option("--seed", seed, "Root seed");
  att->add_option("--out", out_path, "Output path (default stdout)");
  auto *rec = hide->add_subcommand("recover", "Recover the secret with a joint measurement");
  rec->add_option("input", in_path, "State file holding a rho_s record")->required();
  rec->add_option("--seed", seed, "Root seed");

  std::vector<const char *> argv{"rebit"};
  for (const auto &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      emit(format_state(generate(family, s, which)), out_path, out);
      return 0;
    }
    if (conc->parsed()) {
      out << concurrence_lines(read_state_file(in_path), field_override);
      return 0;
    }
    if (ver->parsed()) {
      const Report report = run_suite(suite, {n, seed, trials});
      emit(report.to_csv(), out_path, out);
      return report.all_pass() ? 0 : kExitFail;
    }
    if (mono->parsed()) {
      Report report;
      if (in_path.empty()) {
        VerifyOptions options{n.value_or(3), seed, trials.value_or(10000)};
        Report sweep = verify_monogamy(options);
        report.add(sweep.rows.at(0));
        report.add(sweep.rows.at(1));
      } else {
        const AnyState state = read_state_file(in_path);
        std::optional<ComplexState> pure;
        if (const auto *c = std::get_if<ComplexState>(&state)) {
          pure = *c;
        } else if (const auto *r = std::get_if<RealState>(&state)) {
          if (field_override != "complex")
            throw std::invalid_argument("monogamy: the inequality is a complex-theory claim; "
                                        "pass --field complex to analyse real-tagged data");
          pure = r->to_complex();
        } else {
          throw std::invalid_argument("monogamy: expected a pure state (state_vector)");
        }
        std::string table = "hub,sum_c2,satisfied\n";
        bool all_satisfied = true, any = false;
        for (int h = 0; h < pure->n_systems(); ++h) {
          if (hub && *hub != h) continue;
          const auto result = monogamy_check(*pure, h);
          table += std::to_string(h) + "," + format_number(result.lhs) + "," + (result.satisfied ? "true" : "false") + "\n";
          all_satisfied = all_satisfied && result.satisfied;
          any = true;
        }
        if (!any) throw std::invalid_argument("monogamy: hub out of range");
        emit(table, out_path, out);
        return all_satisfied ? 0 : kExitFail;
      }
      emit(report.to_csv(), out_path, out);
      return report.all_pass() ? 0 : kExitFail;
    }
    if (enc->parsed()) {
      emit(format_state(encode(SIndex::parse(s)).state), out_path, out);
      return 0;
    }
    if (att->parsed()) {
      std::optional<HiddenRecord> record;
      if (!s.empty()) {
        record = encode(SIndex::parse(s));
      } else if (!in_path.empty()) {
        const RealDensity rho = require_real_density(read_state_file(in_path), "hide attack");
        record = HiddenRecord{identify_secret(rho), rho};
      } else {
        throw std::invalid_argument("hide attack: give a state file or --s");
      }
      LocalStrategy chosen;
      if (strategy == "computational") {
        chosen = computational_strategy(record->n_rebits());
      } else if (strategy == "random") {
        Rng rng = make_rng(seed, 0x57A7ULL);
        chosen = random_strategy(record->n_rebits(), rng);
      } else {
        throw std::invalid_argument("hide attack: unknown strategy '" + strategy + "' (computational|random)");
      }
      emit(local_attack(*record, chosen, trials.value_or(1000), seed).to_csv(), out_path, out);
      return 0;
    }
    if (rec->parsed()) {
      const RealDensity rho = require_real_density(read_state_file(in_path), "hide recover");
      if (rho.n_systems() < 2) throw std::invalid_argument("hide recover: need at least two rebits");
      out << joint_recover(rho, seed).to_string() << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    err << "rebit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rebit
