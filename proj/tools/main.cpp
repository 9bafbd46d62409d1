// Command line front end: reduction to standard form, dimension counts for
// linear systems through fat points in P^2 and P^3, (-1)-class tools, and a
// modular interpolation cross-check.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints/class_expr.hpp"
#include "fatpoints/dimension.hpp"
#include "fatpoints/minus_one.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/reduction.hpp"

using fatpoints::DivisorClass;
using fatpoints::Int;
using nlohmann::json;

namespace {

json json_int(const Int& v) {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

json json_mults(const std::vector<Int>& m) {
  json a = json::array();
  for (const Int& v : m) a.push_back(json_int(v));
  return a;
}

json json_class(const DivisorClass& c) {
  return {{"degree", json_int(c.degree())}, {"mults", json_mults(c.mults())}};
}

json json_word(const fatpoints::WeylWord& w) {
  json a = json::array();
  for (const auto& mv : w) {
    if (const auto* t = std::get_if<fatpoints::TranspositionMove>(&mv)) {
      a.push_back({{"move", "swap"}, {"slot", t->slot}});
    } else if (std::holds_alternative<fatpoints::CremonaMove>(mv)) {
      a.push_back({{"move", "cremona"}});
    } else {
      const auto& c = std::get<fatpoints::ClampMove>(mv);
      a.push_back(
          {{"move", "clamp"}, {"slot", c.slot}, {"amount", json_int(c.amount)}});
    }
  }
  return a;
}

// Builds the class from the leftover tokens, reconciling the ambient
// dimension between the Ln(...) notation, the --n flag, and the command's
// default.
DivisorClass resolve_class(const std::vector<std::string>& tokens,
                           std::optional<int> flag_dim,
                           std::optional<int> default_dim) {
  const fatpoints::ParsedClass parsed = fatpoints::parse_class_tokens(tokens);
  std::optional<int> dim = parsed.notation_dim;
  if (flag_dim) {
    if (dim && *dim != *flag_dim)
      throw std::invalid_argument(
          "--n disagrees with the dimension in the class notation");
    dim = flag_dim;
  }
  if (!dim) dim = default_dim;
  if (!dim)
    throw std::invalid_argument(
        "ambient dimension required: pass --n or use Ln(...) notation");
  return DivisorClass(*dim, parsed.degree, parsed.mults);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct ClassArgs {
  std::optional<int> dim;
  bool as_json = false;
  CLI::App* cmd = nullptr;

  void attach(CLI::App* c) {
    cmd = c;
    c->add_option("--n", dim, "ambient dimension n");
    c->add_flag("--json", as_json, "machine readable output");
    c->allow_extras();  // class tokens, possibly negative integers
  }
  DivisorClass cls(std::optional<int> default_dim) const {
    std::vector<std::string> toks = cmd->remaining();
    return resolve_class(toks, dim, default_dim);
  }
};

int run_std(const ClassArgs& a) {
  const DivisorClass d = a.cls(std::nullopt);
  const fatpoints::ReductionReport rep = fatpoints::pre_standard_form(d);
  if (a.as_json) {
    json j = json_class(rep.result);
    j["n"] = d.ambient_dim();
    j["status"] = fatpoints::to_string(rep.status);
    j["word"] = json_word(rep.word);
    emit(j);
  } else if (rep.status == fatpoints::ReductionStatus::NotEffective) {
    std::cout << "NotEffective\n";
  } else {
    std::cout << fatpoints::format_plain(rep.result) << "\n";
  }
  return 0;
}

int run_dim(const ClassArgs& a, int n) {
  const DivisorClass d = a.cls(n);
  if (d.ambient_dim() != n)
    throw std::invalid_argument("this command works in P^" + std::to_string(n));
  const fatpoints::DimensionResult res =
      n == 2 ? fatpoints::dim2(d) : fatpoints::dim3(d);
  if (a.as_json) {
    json j = json_class(d);
    j["n"] = n;
    j["h0"] = json_int(res.h0);
    j["chi"] = json_int(res.chi);
    j["expected"] = json_int(res.expected);
    j["basis"] = fatpoints::to_string(res.basis);
    j["reduced"] = json_class(res.reduced);
    emit(j);
  } else {
    std::cout << res.h0 << "\n";
  }
  return 0;
}

int run_quad(const ClassArgs& a) {
  const DivisorClass d = a.cls(3);
  if (d.ambient_dim() != 3)
    throw std::invalid_argument("quad works in P^3");
  const fatpoints::QuadResult res = fatpoints::quad_reduce(d);
  if (a.as_json) {
    json j = json_class(res.cls);
    j["n"] = 3;
    j["status"] = fatpoints::to_string(res.status);
    emit(j);
  } else if (res.status == fatpoints::ReductionStatus::NotEffective) {
    std::cout << "NotEffective\n";
  } else {
    std::cout << fatpoints::format_plain(res.cls) << "\n";
  }
  return 0;
}

int run_minus_one(const ClassArgs& a) {
  const DivisorClass d = a.cls(std::nullopt);
  const fatpoints::MinusOneCertificate cert = fatpoints::is_minus_one_class(d);
  if (a.as_json) {
    json chain = json::array();
    for (const DivisorClass& c : cert.chain) chain.push_back(json_class(c));
    json j = {{"n", d.ambient_dim()},
              {"verdict", cert.verdict},
              {"chain", chain}};
    if (cert.failure) j["failure"] = fatpoints::to_string(*cert.failure);
    emit(j);
  } else {
    std::cout << (cert.verdict ? "true" : "false") << "\n";
  }
  return 0;
}

int run_oracle(const ClassArgs& a, std::uint32_t prime, std::uint64_t seed,
               int trials) {
  const DivisorClass d = a.cls(std::nullopt);
  std::int64_t h0 = 0;
  if (d.degree() >= 0)
    h0 = fatpoints::h0_interpolation(
        fatpoints::problem_for(d, prime, seed, trials));
  if (a.as_json) {
    json j = json_class(d);
    j["n"] = d.ambient_dim();
    j["h0"] = h0;
    j["prime"] = prime;
    j["seed"] = seed;
    j["trials"] = trials;
    emit(j);
  } else {
    std::cout << h0 << "\n";
  }
  return 0;
}

int run_verify(const ClassArgs& a, std::uint32_t prime, std::uint64_t seed,
               int trials) {
  const DivisorClass d = a.cls(std::nullopt);
  const fatpoints::VerifyReport rep =
      fatpoints::verify_class(d, prime, seed, trials);
  if (a.as_json) {
    json j = json_class(d);
    j["n"] = d.ambient_dim();
    j["agree"] = rep.agree;
    j["algorithm_h0"] = json_int(rep.algorithm_h0);
    j["oracle_h0"] = json_int(rep.oracle_h0);
    emit(j);
  } else {
    std::cout << (rep.agree ? "agree " : "disagree ") << rep.algorithm_h0 << ' '
              << rep.oracle_h0 << "\n";
  }
  return rep.agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Linear systems of hypersurfaces through fat points in very general "
      "position: standard-form reduction, dimension counts, (-1)-classes, "
      "and a modular interpolation cross-check."};
  app.require_subcommand(1);

  ClassArgs std_args, dim2_args, dim3_args, quad_args, minus_args, oracle_args,
      verify_args;
  std_args.attach(app.add_subcommand(
      "std", "reduce a class to pre-standard form (sorts + Cremona moves)"));
  dim2_args.attach(
      app.add_subcommand("dim2", "dimension count of a plane system"));
  dim3_args.attach(
      app.add_subcommand("dim3", "dimension count of a system in P^3"));
  quad_args.attach(app.add_subcommand(
      "quad", "standardize and strip quadrics through nine points"));
  minus_args.attach(
      app.add_subcommand("minus-one", "test a class for being a (-1)-class"));

  int enum_n = 0;
  std::size_t enum_r = 0;
  std::string enum_dmax;
  bool enum_json = false;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "list all (-1)-classes up to a degree bound");
  enum_cmd->add_option("--n", enum_n, "ambient dimension n")->required();
  enum_cmd->add_option("--r", enum_r, "number of points")->required();
  enum_cmd->add_option("--dmax", enum_dmax, "degree bound")->required();
  enum_cmd->add_flag("--json", enum_json, "machine readable output");

  std::uint32_t prime = 2147483647u;
  std::uint64_t seed = 12345;
  int trials = 3;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "modular interpolation h0 at random points over F_p");
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "compare the dimension count against the modular oracle");
  for (CLI::App* c : {oracle_cmd, verify_cmd}) {
    c->add_option("--p", prime, "prime modulus");
    c->add_option("--seed", seed, "random seed");
    c->add_option("--trials", trials, "number of independent trials");
  }
  oracle_args.attach(oracle_cmd);
  verify_args.attach(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (std_args.cmd->parsed()) return run_std(std_args);
    if (dim2_args.cmd->parsed()) return run_dim(dim2_args, 2);
    if (dim3_args.cmd->parsed()) return run_dim(dim3_args, 3);
    if (quad_args.cmd->parsed()) return run_quad(quad_args);
    if (minus_args.cmd->parsed()) return run_minus_one(minus_args);
    if (enum_cmd->parsed()) {
      const fatpoints::MinusOneSet set =
          fatpoints::enumerate_minus_one(enum_n, enum_r, Int(enum_dmax));
      set.for_each([&](const DivisorClass& c) {
        if (enum_json) {
          emit(json_class(c));
        } else {
          std::cout << fatpoints::format_plain(c) << "\n";
        }
      });
      return 0;
    }
    if (oracle_args.cmd->parsed())
      return run_oracle(oracle_args, prime, seed, trials);
    if (verify_args.cmd->parsed())
      return run_verify(verify_args, prime, seed, trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
