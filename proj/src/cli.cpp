#include "pfree/cli.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pfree/checkers.hpp"
#include "pfree/json_io.hpp"
#include "pfree/local_data.hpp"
#include "pfree/model_zoo.hpp"

namespace pfree::cli {

using io::Json;

namespace {

Json read_input(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input_path) {
    std::ifstream f(*cfg.input_path);
    if (!f) throw Error(Errc::Parse, "cannot open input file '" + *cfg.input_path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const Integer& need(const std::optional<Integer>& v, const char* flag) {
  if (!v) throw Error(Errc::InvalidArgument, std::string("missing required flag --") + flag);
  return *v;
}

std::vector<Integer> read_weights(const Json& j) {
  if (!j.is_object() || !j.contains("weights")) throw Error(Errc::Parse, "missing field 'weights'");
  return io::parse_integer_array(j["weights"]);
}

Json data_with_e(const LocalData& L, bool canonicalized) {
  Json out = io::to_json(L);
  out["e"] = euler_mod_z(L).to_string();
  if (canonicalized) out["canonicalized"] = true;
  return out;
}

RunResult emit(int code, const Json& j) { return {code, j.dump() + "\n"}; }

RunResult run_check(const RunConfig& cfg, const Json& in) {
  const std::string& name = cfg.check_name;
  CheckReport rep;
  bool canonicalized = false;
  if (name == "min-orbits") {
    rep = check_min_orbits(io::parse_local_data(in, &canonicalized));
  } else if (name == "gcd-partner") {
    rep = check_gcd_partner(io::parse_local_data(in, &canonicalized));
  } else if (name == "weinstein") {
    rep = check_weinstein(io::parse_local_data(in, &canonicalized));
  } else if (name == "liang") {
    rep = check_liang(io::parse_local_data(in, &canonicalized));
  } else if (name == "localization") {
    rep = check_localization_sum(io::parse_fixed_points(in));
  } else if (name == "sphere-conjecture") {
    rep = check_sphere_conjecture(read_weights(in));
  } else if (name == "symplectic") {
    rep = check_symplectic_sum(io::parse_strata(in));
  } else {
    throw Error(Errc::InvalidArgument, "unknown check '" + name + "'");
  }
  Json out = io::to_json(rep);
  if (canonicalized) out["canonicalized"] = true;
  return emit(rep.passed ? 0 : 1, out);
}

RunResult dispatch(const RunConfig& cfg, std::istream& input) {
  switch (cfg.subcommand) {
    case Subcommand::Euler: {
      bool canon = false;
      LocalData L = io::parse_local_data(read_input(cfg, input), &canon);
      Json out = {{"e", euler_mod_z(L).to_string()}};
      if (canon) out["canonicalized"] = true;
      return emit(0, out);
    }
    case Subcommand::Quotient: {
      bool canon = false;
      LocalData L = io::parse_local_data(read_input(cfg, input), &canon);
      const Integer& r = need(cfg.r, "r");
      return emit(0, data_with_e(quotient_by_cyclic(L, r), canon));
    }
    case Subcommand::Stabilize: {
      bool canon = false;
      LocalData L = io::parse_local_data(read_input(cfg, input), &canon);
      return emit(0, data_with_e(stabilize(L), canon));
    }
    case Subcommand::Sphere: {
      SphereAction a{read_weights(read_input(cfg, input))};
      Rational c = sphere_chern(a);
      Json out = {{"weights", io::to_json(a.weights)},
                  {"chern", c.to_string()},
                  {"e", qmod_z(c).to_string()}};
      if (a.weights.size() >= 2) {
        auto L = sphere_local_data(a);
        out["pseudo_free"] = L.has_value();
        if (L) out["local_data"] = io::to_json(*L);
      }
      return emit(0, out);
    }
    case Subcommand::Lens: {
      auto [L, e] = lens_local_data(need(cfg.p, "p"), need(cfg.q, "q"));
      Json out = io::to_json(L);
      out["e"] = e.to_string();
      return emit(0, out);
    }
    case Subcommand::Kawasaki: {
      auto w = read_weights(read_input(cfg, input));
      Json ell = Json::array();
      for (std::size_t k = 1; k < w.size(); ++k) ell.push_back(io::to_json(kawasaki_ell(k, w)));
      return emit(0, Json{{"weights", io::to_json(w)},
                          {"ell", ell},
                          {"chern", kawasaki_chern(w).to_string()}});
    }
    case Subcommand::Suspend: {
      auto f = io::parse_fixed_points(read_input(cfg, input));
      return emit(0, data_with_e(suspend_fixed_points(f, need(cfg.p, "p")), false));
    }
    case Subcommand::Cpn: {
      Json in = read_input(cfg, input);
      if (!in.is_object() || !in.contains("params")) throw Error(Errc::Parse, "missing field 'params'");
      return emit(0, io::to_json(projective_space_fixed_data(io::parse_integer_array(in["params"]))));
    }
    case Subcommand::Check:
      return run_check(cfg, read_input(cfg, input));
    case Subcommand::VerifyMc: {
      SphereAction a{read_weights(read_input(cfg, input))};
      Rational exact = sphere_chern(a);
      auto est = sphere_chern_numeric(a, cfg.mc);
      double sigmas = est.std_error > 0 ? std::abs(est.estimate - exact.to_double()) / est.std_error : 0.0;
      return emit(0, Json{{"weights", io::to_json(a.weights)},
                          {"estimate", est.estimate},
                          {"stderr", est.std_error},
                          {"exact", exact.to_string()},
                          {"sigmas", sigmas}});
    }
  }
  throw Error(Errc::InvalidArgument, "unknown subcommand");
}

Json error_json(const std::string& message, const std::string& kind) {
  return Json{{"error", message}, {"kind", kind}, {"violations", Json::array()}};
}

}  // namespace

RunResult run(const RunConfig& cfg, std::istream& input) {
  try {
    return dispatch(cfg, input);
  } catch (const io::ValidationError& e) {
    Json out = error_json(e.what(), std::string(errc_name(e.code())));
    for (const auto& v : e.violations()) {
      Json jv = {{"message", v.message}};
      if (v.orbit) jv["orbit"] = *v.orbit;
      out["violations"].push_back(std::move(jv));
    }
    return emit(2, out);
  } catch (const Error& e) {
    return emit(2, error_json(e.what(), std::string(errc_name(e.code()))));
  } catch (const std::exception& e) {
    return emit(2, error_json(e.what(), "Internal"));
  }
}

RunResult run_args(const std::vector<std::string>& args, std::istream& input) {
  CLI::App app{"Chern numbers mod Z of pseudo-free circle actions", "pfree"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string input_path, r, p, q;
  app.add_option("-i,--input", input_path, "input JSON file (default: stdin)");

  struct Entry {
    const char* name;
    Subcommand sub;
    const char* help;
  };
  const Entry entries[] = {
      {"euler", Subcommand::Euler, "Chern number mod Z of local data"},
      {"quotient", Subcommand::Quotient, "local data of the quotient by Z_r"},
      {"stabilize", Subcommand::Stabilize, "append a unit weight to every orbit"},
      {"sphere", Subcommand::Sphere, "Chern number of a linear sphere action"},
      {"lens", Subcommand::Lens, "single (p;q) orbit model in dimension 3"},
      {"kawasaki", Subcommand::Kawasaki, "Chern number through Kawasaki's coefficients"},
      {"suspend", Subcommand::Suspend, "suspend isolated fixed points by a prime p"},
      {"cpn", Subcommand::Cpn, "fixed point weights of a toric action on CP^n"},
      {"check", Subcommand::Check, "run one arithmetic constraint check"},
      {"verify-mc", Subcommand::VerifyMc, "Monte Carlo estimate of a sphere Chern number"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const auto& e : entries) {
    CLI::App* s = app.add_subcommand(e.name, e.help);
    subs.emplace_back(s, e.sub);
    switch (e.sub) {
      case Subcommand::Quotient:
        s->add_option("-r,--r", r, "order of the cyclic subgroup")->required();
        break;
      case Subcommand::Lens:
        s->add_option("-p,--p", p, "isotropy order")->required();
        s->add_option("-q,--q", q, "slice weight")->required();
        break;
      case Subcommand::Suspend:
        s->add_option("-p,--p", p, "prime larger than every |weight|")->required();
        break;
      case Subcommand::Check:
        s->add_option("-n,--name", cfg.check_name,
                      "min-orbits | gcd-partner | localization | weinstein | "
                      "sphere-conjecture | symplectic | liang")
            ->required();
        break;
      case Subcommand::VerifyMc:
        s->add_option("--seed", cfg.mc.seed, "random stream seed");
        s->add_option("--samples", cfg.mc.samples, "number of samples");
        s->add_option("--chunks", cfg.mc.chunks, "number of independent streams");
        break;
      default:
        break;
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // argv[0]
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return emit(2, error_json(e.what(), "Usage"));
  }

  for (const auto& [s, sub] : subs)
    if (s->parsed()) cfg.subcommand = sub;
  if (!input_path.empty()) cfg.input_path = input_path;
  try {
    auto to_int = [](const std::string& s) -> std::optional<Integer> {
      if (s.empty()) return std::nullopt;
      Rational v = Rational::parse(s);
      if (!v.is_integer()) throw Error(Errc::Parse, "expected an integer flag value, got '" + s + "'");
      return v.num();
    };
    cfg.r = to_int(r);
    cfg.p = to_int(p);
    cfg.q = to_int(q);
  } catch (const Error& e) {
    return emit(2, error_json(e.what(), std::string(errc_name(e.code()))));
  }
  return run(cfg, input);
}

}  // namespace pfree::cli
