#include "gt/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "gt/io.hpp"
#include "gt/structure.hpp"
#include "gt/verify.hpp"

namespace gt {

namespace {

struct SeedInput {
  Seed seed;
  std::string digest;
};

SeedInput load_seed(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open seed file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return SeedInput{parse_seed_document(text), input_digest(text)};
}

Json make_document(const std::string& command, const std::string& digest, Json arguments, Json payload) {
  Json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["input_digest"] = digest;
  doc["arguments"] = std::move(arguments);
  doc["payload"] = std::move(payload);
  return doc;
}

ActionMode parse_mode(const std::string& text) {
  if (text == "generic") return ActionMode::Generic;
  if (text == "standard") return ActionMode::Standard;
  throw ParseError("mode must be \"generic\" or \"standard\", got \"" + text + "\"");
}

void require_generic_seed(const Seed& seed) {
  if (!is_generic(seed)) throw std::domain_error("seed is not generic");
}

Json run_omega(const std::string& seed_path, const std::string& shift_arg) {
  const SeedInput input = load_seed(seed_path);
  const Shift shift =
      shift_arg.empty() ? Shift(input.seed.height()) : parse_shift_arg(shift_arg, input.seed.height());
  const Tableau t(std::make_shared<const Seed>(input.seed), shift);

  Json omega_entries = Json::array();
  for (const auto& triple : omega_set(t)) {
    Json entry;
    entry["triple"] = triple_to_json(triple);
    entry["value"] = to_string(omega_value(t, triple));
    omega_entries.push_back(std::move(entry));
  }
  Json payload;
  payload["n"] = input.seed.height();
  payload["shift"] = shift_to_json(shift);
  payload["omega"] = std::move(omega_entries);
  payload["omega_plus"] = omega_set_to_json(omega_plus_set(t));

  Json arguments;
  arguments["shift"] = shift_to_json(shift);
  return make_document("omega", input.digest, std::move(arguments), std::move(payload));
}

Json run_act(const std::string& seed_path, const std::string& shift_arg, const std::string& generator_arg,
             const std::string& mode_arg) {
  const SeedInput input = load_seed(seed_path);
  const int n = input.seed.height();
  const Shift shift = shift_arg.empty() ? Shift(n) : parse_shift_arg(shift_arg, n);
  const ActionMode mode = parse_mode(mode_arg);
  if (mode == ActionMode::Generic) require_generic_seed(input.seed);

  int gen_i = 0;
  int gen_j = 0;
  {
    std::stringstream stream(generator_arg);
    char comma = 0;
    if (!(stream >> gen_i >> comma >> gen_j) || comma != ',' || !stream.eof()) {
      throw ParseError("generator must be \"i,j\", got \"" + generator_arg + "\"");
    }
  }
  if (gen_i < 1 || gen_i > n || gen_j < 1 || gen_j > n) {
    throw ParseError("generator indices must lie in 1.." + std::to_string(n));
  }

  const Tableau t(std::make_shared<const Seed>(input.seed), shift);
  const GTVector result = act(GeneratorIndex{gen_i, gen_j}, GTVector::basis_vector(t), mode);

  Json terms = Json::array();
  for (const auto& [z, c] : result.terms()) {
    Json term;
    term["shift"] = shift_to_json(z);
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  Json payload;
  payload["n"] = n;
  payload["generator"] = Json::array({gen_i, gen_j});
  payload["mode"] = mode_arg;
  payload["terms"] = std::move(terms);

  Json arguments;
  arguments["shift"] = shift_to_json(shift);
  arguments["generator"] = Json::array({gen_i, gen_j});
  arguments["mode"] = mode_arg;
  return make_document("act", input.digest, std::move(arguments), std::move(payload));
}

Json run_basis(const std::string& seed_path, const std::string& shift_arg, std::int64_t radius,
               const std::string& which) {
  const SeedInput input = load_seed(seed_path);
  const int n = input.seed.height();
  require_generic_seed(input.seed);
  if (which != "N" && which != "I") throw ParseError("--which must be N or I, got \"" + which + "\"");
  const Shift center = shift_arg.empty() ? Shift(n) : parse_shift_arg(shift_arg, n);

  const Tableau r(std::make_shared<const Seed>(input.seed), center);
  const Box box = Box::cube(n, radius);
  const auto members = which == "N" ? basis_N_in_box(r, box) : basis_I_in_box(r, box);

  Json shifts = Json::array();
  for (const auto& t : members) shifts.push_back(shift_to_json(t.shift()));
  Json payload;
  payload["n"] = n;
  payload["which"] = which;
  payload["radius"] = radius;
  payload["center"] = shift_to_json(center);
  payload["omega_plus"] = omega_set_to_json(omega_plus_set(r));
  payload["count"] = members.size();
  payload["shifts"] = std::move(shifts);

  Json arguments;
  arguments["shift"] = shift_to_json(center);
  arguments["radius"] = radius;
  arguments["which"] = which;
  return make_document("basis", input.digest, std::move(arguments), std::move(payload));
}

Json run_block(const std::string& seed_path, std::optional<std::int64_t> radius) {
  const SeedInput input = load_seed(seed_path);
  const int n = input.seed.height();
  require_generic_seed(input.seed);

  Json d_table = Json::array();
  for (int p = 2; p <= n; ++p) {
    for (int u = 1; u <= p - 1; ++u) {
      Json entry;
      entry["p"] = p;
      entry["u"] = u;
      entry["d"] = d_pu(input.seed, p, u);
      d_table.push_back(std::move(entry));
    }
  }
  const std::int64_t count = block_count(input.seed);

  Json payload;
  payload["n"] = n;
  payload["d_table"] = std::move(d_table);
  payload["block_count"] = count;
  payload["irreducible"] = count == 1;

  if (radius) {
    const Box box = Box::cube(n, *radius);
    const ClassPoset poset = enumerate_omega_classes(input.seed, box);
    Json nodes = Json::array();
    for (const auto& node : poset.nodes) {
      Json entry;
      entry["omega_plus"] = omega_set_to_json(node.omega_plus);
      entry["representative"] = shift_to_json(node.representative);
      nodes.push_back(std::move(entry));
    }
    Json edges = Json::array();
    for (const auto& [a, b] : poset.edges) edges.push_back(Json::array({a, b}));
    Json census;
    census["radius"] = *radius;
    census["cells"] = box.cell_count();
    census["classes"] = poset.nodes.size();
    census["match"] = static_cast<std::int64_t>(poset.nodes.size()) == count;
    census["nodes"] = std::move(nodes);
    census["edges"] = std::move(edges);
    payload["census"] = std::move(census);
  }

  Json arguments;
  if (radius) {
    arguments["radius"] = *radius;
  } else {
    arguments["radius"] = nullptr;
  }
  return make_document("block", input.digest, std::move(arguments), std::move(payload));
}

struct VerifyInvocation {
  Json document;
  bool pass = true;
};

VerifyInvocation run_verify(const std::string& suite, const std::string& seed_path,
                            const std::string& weight_arg, int n, int samples, std::uint64_t rng_seed) {
  SuiteOptions opts;
  opts.n = n;
  opts.samples = samples;
  opts.rng_seed = rng_seed;

  std::string digest_source = "suite=" + suite + ";n=" + std::to_string(n) +
                              ";samples=" + std::to_string(samples) + ";rng=" + std::to_string(rng_seed);
  if (!seed_path.empty()) {
    const SeedInput input = load_seed(seed_path);
    opts.seed = input.seed;
    opts.n = input.seed.height();
    digest_source = input.digest;
  }
  if (!weight_arg.empty()) {
    std::vector<std::int64_t> lambda;
    std::stringstream stream(weight_arg);
    std::string part;
    while (std::getline(stream, part, ',')) {
      try {
        lambda.push_back(std::stoll(part));
      } catch (const std::exception&) {
        throw ParseError("invalid weight entry \"" + part + "\"");
      }
    }
    try {
      opts.weight = HighestWeight(std::move(lambda));
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("invalid weight: ") + e.what());
    }
    digest_source += ";weight=" + weight_arg;
  }

  SuiteReport report;
  if (suite == "relations") {
    report = verify_relations(opts);
  } else if (suite == "gamma") {
    report = verify_gamma(opts);
  } else if (suite == "closure") {
    report = verify_closure(opts);
  } else if (suite == "findim") {
    report = verify_findim(opts);
  } else {
    throw ParseError("unknown suite \"" + suite + "\"");
  }

  Json arguments;
  arguments["suite"] = suite;
  arguments["n"] = opts.n;
  arguments["samples"] = samples;
  arguments["rng_seed"] = rng_seed;
  if (!weight_arg.empty()) arguments["weight"] = weight_arg;

  VerifyInvocation out;
  out.pass = report.pass();
  out.document = make_document("verify", input_digest(digest_source), std::move(arguments), report.to_json());
  return out;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact Gelfand-Tsetlin lattice toolkit"};
  app.require_subcommand(1);

  std::string seed_path;
  std::string shift_arg;
  std::string generator_arg;
  std::string mode_arg = "generic";
  std::string which = "I";
  std::string suite;
  std::string weight_arg;
  std::int64_t radius = 0;
  bool radius_set = false;
  int n = 3;
  int samples = 20;
  std::uint64_t rng_seed = 1;

  auto* omega_cmd = app.add_subcommand("omega", "Integer-linked entry pairs of a tableau");
  omega_cmd->add_option("--seed", seed_path, "seed document")->required();
  omega_cmd->add_option("--shift", shift_arg, "shift coordinates, comma separated");

  auto* act_cmd = app.add_subcommand("act", "Apply a generator E_ij to a tableau");
  act_cmd->add_option("--seed", seed_path)->required();
  act_cmd->add_option("--shift", shift_arg);
  act_cmd->add_option("--generator", generator_arg, "indices \"i,j\"")->required();
  act_cmd->add_option("--mode", mode_arg, "generic or standard");

  auto* basis_cmd = app.add_subcommand("basis", "Submodule (N) or irreducible-class (I) basis in a box");
  basis_cmd->add_option("--seed", seed_path)->required();
  basis_cmd->add_option("--shift", shift_arg);
  basis_cmd->add_option("--radius", radius, "box radius")->required();
  basis_cmd->add_option("--which", which, "N or I");

  auto* block_cmd = app.add_subcommand("block", "d-table, block count, optional class census");
  block_cmd->add_option("--seed", seed_path)->required();
  auto* radius_opt = block_cmd->add_option("--radius", radius, "census box radius");

  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", suite, "relations, gamma, closure or findim")->required();
  verify_cmd->add_option("--seed", seed_path);
  verify_cmd->add_option("--weight", weight_arg, "dominant integral weight, comma separated");
  verify_cmd->add_option("--n", n, "lattice height for sampled seeds");
  verify_cmd->add_option("--samples", samples);
  verify_cmd->add_option("--rng-seed", rng_seed);

  std::vector<const char*> argv;
  argv.push_back("gt");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  CliResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    radius_set = radius_opt->count() > 0;

    Json document;
    bool verify_pass = true;
    if (omega_cmd->parsed()) {
      document = run_omega(seed_path, shift_arg);
    } else if (act_cmd->parsed()) {
      document = run_act(seed_path, shift_arg, generator_arg, mode_arg);
    } else if (basis_cmd->parsed()) {
      document = run_basis(seed_path, shift_arg, radius, which);
    } else if (block_cmd->parsed()) {
      document = run_block(seed_path, radius_set ? std::optional<std::int64_t>(radius) : std::nullopt);
    } else {
      const VerifyInvocation invocation = run_verify(suite, seed_path, weight_arg, n, samples, rng_seed);
      document = invocation.document;
      verify_pass = invocation.pass;
    }
    result.out = document.dump(2) + "\n";
    result.exit_code = verify_pass ? kExitOk : kExitVerifyFailure;
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    result.exit_code = kExitOk;
  } catch (const CLI::ParseError& e) {
    result.err = std::string("usage error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
  } catch (const ParseError& e) {
    result.err = std::string("input error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
  } catch (const std::domain_error& e) {
    result.err = std::string("domain error: ") + e.what() + "\n";
    result.exit_code = kExitDomainError;
  } catch (const std::invalid_argument& e) {
    result.err = std::string("input error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
  } catch (const std::out_of_range& e) {
    result.err = std::string("input error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
  } catch (const std::logic_error& e) {
    result.err = std::string("invariant violation: ") + e.what() + "\n";
    result.exit_code = kExitVerifyFailure;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitInputError;
  }
  return result;
}

}  // namespace gt
