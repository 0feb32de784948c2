// fcc: command-line front end to the fcc library.
//
// Exit codes: 0 ok, 1 usage, 2 domain, 3 shape, 4 resource limit / budget,
// 5 hypothesis, 6 integrity, 7 parse.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcc/fcc.hpp"

namespace {

using fcc::json;

int exit_code(fcc::ErrorKind kind) {
  switch (kind) {
    case fcc::ErrorKind::Domain: return 2;
    case fcc::ErrorKind::Shape: return 3;
    case fcc::ErrorKind::ResourceLimit: return 4;
    case fcc::ErrorKind::Hypothesis: return 5;
    case fcc::ErrorKind::Integrity: return 6;
    case fcc::ErrorKind::Parse: return 7;
  }
  return 1;
}

constexpr int kBudgetExit = 4;

struct Config {
  int s = 0;
  int k = 0;
  int t = 0;
  int rho = -1;
  int lambda = 0;
  std::string function;
  std::string output = "human";
  std::uint64_t budget = 50'000'000;
  std::int64_t r_max = -1;
  std::vector<std::string> vecs;
  std::string matrix_path, encoder_path, generator_path, out_path;
  std::string mode, kind;
  std::string x, e;
  int t_max = 0, lambda_max = 0;
  bool sphere = false;
  bool search = false;
};

// Human mode prints the same object the JSON mode would, flattened to
// "key: value" lines, so the two can never disagree on a number.
void print_human(const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema") continue;
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const json& v = it.value();
    if (v.is_object()) {
      print_human(v, key);
    } else if (v.is_string()) {
      std::cout << key << ": " << v.get<std::string>() << "\n";
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) print_human(v[i], key + "[" + std::to_string(i) + "]");
    } else {
      std::cout << key << ": " << v.dump() << "\n";
    }
  }
}

void emit(const Config& cfg, json j) {
  j["schema"] = fcc::kSchemaVersion;
  if (cfg.output == "json")
    std::cout << j.dump(2) << "\n";
  else
    print_human(j);
}

fcc::RingParams ring(const Config& cfg) {
  if (cfg.s == 0) fcc::fail(fcc::ErrorKind::Domain, "--s is required");
  return fcc::RingParams::make(cfg.s);
}

int require_t(const Config& cfg) {
  if (cfg.t < 1) fcc::fail(fcc::ErrorKind::Domain, "--t is required and must be >= 1");
  return cfg.t;
}

std::size_t require_k(const Config& cfg) {
  if (cfg.k < 1) fcc::fail(fcc::ErrorKind::Domain, "--k is required and must be >= 1");
  return static_cast<std::size_t>(cfg.k);
}

/// Selectors: wh, wdist:T, msum, msum-linear, linear:PATH, table:PATH.
fcc::FunctionSpec parse_function(const Config& cfg) {
  const std::string& sel = cfg.function;
  if (sel.empty()) fcc::fail(fcc::ErrorKind::Domain, "--function is required");
  const auto colon = sel.find(':');
  const std::string head = sel.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : sel.substr(colon + 1);
  if (head == "wh") return fcc::FunctionSpec::hom_weight(ring(cfg), require_k(cfg));
  if (head == "msum") return fcc::FunctionSpec::modular_sum(ring(cfg), require_k(cfg));
  if (head == "msum-linear") return fcc::FunctionSpec::modular_sum_as_linear(ring(cfg), require_k(cfg));
  if (head == "wdist") {
    if (arg.empty()) fcc::fail(fcc::ErrorKind::Parse, "wdist needs a threshold, e.g. wdist:2");
    return fcc::FunctionSpec::weight_distribution(ring(cfg), require_k(cfg),
                                                  static_cast<int>(fcc::detail::parse_int(arg, "wdist threshold")));
  }
  if (head == "linear") {
    fcc::FunctionSpec f = fcc::FunctionSpec::linear(fcc::parse_matrix(fcc::read_file(arg)));
    if (cfg.s != 0 && f.params().s != cfg.s) fcc::fail(fcc::ErrorKind::Shape, "--s disagrees with the matrix file");
    if (cfg.k != 0 && static_cast<int>(f.k()) != cfg.k) fcc::fail(fcc::ErrorKind::Shape, "--k disagrees with the matrix file");
    return f;
  }
  if (head == "table") {
    fcc::FunctionSpec f = fcc::parse_table_function(fcc::read_file(arg), ring(cfg));
    if (cfg.k != 0 && static_cast<int>(f.k()) != cfg.k) fcc::fail(fcc::ErrorKind::Shape, "--k disagrees with the table file");
    return f;
  }
  fcc::fail(fcc::ErrorKind::Parse, "unknown function selector '" + sel + "'");
}

fcc::SearchOptions search_options(const Config& cfg) {
  fcc::SearchOptions o;
  o.node_budget = cfg.budget;
  return o;
}

json code_json(const fcc::Code& code) {
  json words = json::array();
  for (const auto& w : code.codewords()) words.push_back(fcc::to_json(w));
  json j{{"size", code.size()}, {"length", code.length()}, {"codewords", std::move(words)}};
  if (code.size() >= 2) j["min_distance"] = fcc::min_distance(code);
  return j;
}

std::vector<fcc::Word> parse_vectors(const Config& cfg, fcc::RingParams p) {
  std::vector<fcc::Word> out;
  for (const auto& v : cfg.vecs) out.push_back(fcc::parse_word(v, p));
  return out;
}

// ---------------------------------------------------------------------------

int cmd_weight(const Config& cfg) {
  const auto p = ring(cfg);
  if (cfg.vecs.size() != 1) fcc::fail(fcc::ErrorKind::Shape, "weight takes exactly one --vec");
  const fcc::Word x = fcc::parse_word(cfg.vecs[0], p);
  emit(cfg, {{"vector", fcc::to_json(x)}, {"weight", fcc::hom_weight(x)}});
  return 0;
}

int cmd_dist(const Config& cfg) {
  const auto p = ring(cfg);
  if (cfg.vecs.size() != 2) fcc::fail(fcc::ErrorKind::Shape, "dist takes exactly two --vec");
  const auto v = parse_vectors(cfg, p);
  emit(cfg, {{"x", fcc::to_json(v[0])}, {"y", fcc::to_json(v[1])}, {"distance", fcc::hom_distance(v[0], v[1])}});
  return 0;
}

int cmd_ball(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto p = ring(cfg);
  if (cfg.vecs.size() != 1) fcc::fail(fcc::ErrorKind::Shape, "ball takes exactly one --vec (the centre)");
  if (cfg.rho < 0) fcc::fail(fcc::ErrorKind::Domain, "--rho is required");
  const fcc::Word c = fcc::parse_word(cfg.vecs[0], p);
  const auto words = cfg.sphere ? fcc::sphere(c, cfg.rho, limits) : fcc::ball(c, cfg.rho, limits);
  json list = json::array();
  for (const auto& w : words) list.push_back(fcc::to_json(w));
  emit(cfg, {{"center", fcc::to_json(c)}, {"radius", cfg.rho}, {"kind", cfg.sphere ? "sphere" : "ball"},
             {"size", words.size()}, {"words", std::move(list)}});
  return 0;
}

int cmd_locality(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto f = parse_function(cfg);
  if (cfg.rho < 0) fcc::fail(fcc::ErrorKind::Domain, "--rho is required");
  fcc::LocalityProfile prof = fcc::lambda0(f, cfg.rho, limits);
  prof.theoretical_bounds = fcc::theoretical_locality_bounds(f, cfg.rho);
  json j = fcc::to_json(prof);
  j["function"] = f.describe();
  j["contiguous"] = fcc::contiguous_block_check(f, fcc::natural_order(f, limits), cfg.rho, limits);
  emit(cfg, j);
  return 0;
}

int cmd_tau(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto f = parse_function(cfg);
  if (cfg.rho < 0) fcc::fail(fcc::ErrorKind::Domain, "--rho is required");
  const std::size_t lambda =
      cfg.lambda > 0 ? static_cast<std::size_t>(cfg.lambda) : fcc::lambda0(f, cfg.rho, limits).lambda0;
  const fcc::TauMap tau = fcc::build_tau(f, lambda, cfg.rho, limits);
  json labels = json::array();
  for (std::uint64_t i = 0; i < tau.assignment.size(); ++i)
    labels.push_back({{"x", fcc::to_json(fcc::word_at(f.params(), f.k(), i))}, {"tau", tau.assignment[i]}});
  emit(cfg, {{"function", f.describe()}, {"lambda", lambda}, {"rho", cfg.rho}, {"labels", std::move(labels)}});
  return 0;
}

int cmd_drm(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto f = parse_function(cfg);
  const int t = require_t(cfg);
  const fcc::RequirementMatrix d = cfg.vecs.empty() ? fcc::full_requirement_matrix(f, t, limits)
                                                    : fcc::requirement_matrix(f, t, parse_vectors(cfg, f.params()));
  json j = fcc::to_json(d);
  if (!cfg.out_path.empty()) fcc::write_file(cfg.out_path, j.dump(2) + "\n");
  emit(cfg, j);
  return 0;
}

int cmd_bound(const Config& cfg, const fcc::EnumLimits& limits) {
  const std::string& mode = cfg.mode;
  if (mode == "generic" || mode == "z4") {
    if (cfg.matrix_path.empty()) fcc::fail(fcc::ErrorKind::Domain, "--matrix is required");
    const auto d = fcc::requirement_matrix_from_json(fcc::parse_json(fcc::read_file(cfg.matrix_path), cfg.matrix_path));
    const fcc::Rational q = mode == "z4" ? fcc::plotkin_ratio_z4(d, fcc::RingParams::make(cfg.s == 0 ? 2 : cfg.s))
                                         : fcc::plotkin_ratio_generic(d);
    emit(cfg, {{"mode", mode}, {"M", d.size()}, {"sum", d.total()}, {"ratio", fcc::to_json(q)}, {"bound", fcc::ceil(q)}});
    return 0;
  }
  if (mode == "msum") {
    const auto b = fcc::modular_sum_lower_bound(ring(cfg).s, require_t(cfg));
    json j{{"mode", mode}, {"bound", fcc::to_json(b.bound)}, {"ceiling", b.ceiling}, {"equals_two_t", b.equals_two_t}};
    j["optimal"] = b.optimal ? json(*b.optimal) : json(nullptr);
    emit(cfg, j);
    return 0;
  }
  if (mode == "linear") {
    const auto f = parse_function(cfg);
    const int t = require_t(cfg);
    if (f.kind() != fcc::FunctionKind::Linear) fcc::fail(fcc::ErrorKind::Domain, "linear mode needs linear:PATH or msum-linear");
    const auto a = fcc::analyze_linear(f, limits);
    json j{{"mode", mode}, {"kernel_size", a.kernel_size}, {"A", a.kernel_weight_sum}, {"surjective", a.surjective}};
    if (a.surjective) {
      const auto b = fcc::linear_plotkin_bound(f, t, limits);
      j["bound"] = fcc::to_json(b.bound);
      j["ceiling"] = b.ceiling;
      if (a.kernel_size == 1 && f.output_length() == f.k())
        j["length_bound"] = fcc::to_json(fcc::bijective_length_bound(f.params().s, f.k(), t));
    } else {
      // onto hypothesis fails: fall back to the generic path
      j["note"] = "f is not onto; generic lower bound over all messages";
      j["ceiling"] = fcc::redundancy_lower_bound(f, t, fcc::all_words(f.params(), f.k(), limits), search_options(cfg), limits);
    }
    emit(cfg, j);
    return 0;
  }
  if (mode == "upper") {
    const int t = require_t(cfg);
    json j{{"mode", mode}, {"t", t}};
    std::int64_t lambda = cfg.lambda;
    if (!cfg.function.empty()) {
      const auto f = parse_function(cfg);
      const auto prof = fcc::lambda0(f, 2 * t, limits);
      lambda = static_cast<std::int64_t>(prof.lambda0);
      j["function"] = f.describe();
      j["contiguous"] = fcc::contiguous_block_check(f, fcc::natural_order(f, limits), 2 * t, limits);
    }
    j["lambda"] = lambda;
    j["bound"] = fcc::upper_bound_from_lambda(lambda, t);
    emit(cfg, j);
    return 0;
  }
  if (mode == "lower") {
    const auto f = parse_function(cfg);
    const int t = require_t(cfg);
    const auto vectors = cfg.vecs.empty() ? fcc::all_words(f.params(), f.k(), limits) : parse_vectors(cfg, f.params());
    const auto d = fcc::requirement_matrix(f, t, vectors);
    json j{{"mode", mode}, {"function", f.describe()}, {"t", t}, {"M", d.size()},
           {"plotkin_generic", fcc::plotkin_bound_generic(d)}};
    if (f.params().s == 2) j["plotkin_z4"] = fcc::plotkin_bound_z4(d);
    j["bound"] = fcc::redundancy_lower_bound(f, t, vectors, search_options(cfg), limits);
    emit(cfg, j);
    return 0;
  }
  fcc::fail(fcc::ErrorKind::Domain, "unknown --mode '" + mode + "' (generic, z4, msum, linear, upper, lower)");
}

int report_search(const Config& cfg, json j, const fcc::SearchResult& r) {
  j.update(fcc::to_json(r));
  emit(cfg, j);
  return r.exhausted ? 0 : kBudgetExit;
}

int cmd_nh_search(const Config& cfg) {
  if (cfg.matrix_path.empty()) fcc::fail(fcc::ErrorKind::Domain, "--matrix is required");
  if (cfg.r_max < 0) fcc::fail(fcc::ErrorKind::Domain, "--rmax is required");
  const auto d = fcc::requirement_matrix_from_json(fcc::parse_json(fcc::read_file(cfg.matrix_path), cfg.matrix_path));
  return report_search(cfg, json{{"M", d.size()}}, fcc::exact_nh(d, ring(cfg), cfg.r_max, search_options(cfg)));
}

int cmd_construct(const Config& cfg, const fcc::EnumLimits& limits) {
  const std::string& kind = cfg.kind;
  if (kind == "explicit") {
    const auto code = fcc::explicit_code(cfg.lambda, require_t(cfg), ring(cfg));
    json j{{"type", "code"}, {"s", cfg.s}, {"lambda", cfg.lambda}, {"t", cfg.t}};
    j.update(code_json(code));
    j["schema"] = fcc::kSchemaVersion;
    if (!cfg.out_path.empty()) fcc::write_file(cfg.out_path, j.dump(2) + "\n");
    emit(cfg, j);
    return 0;
  }

  std::optional<fcc::SystematicEncoder> enc;
  std::optional<fcc::FunctionSpec> f;
  if (kind == "lambda4") {
    f = parse_function(cfg);
    const int t = require_t(cfg);
    enc = fcc::encoder_lambda4(*f, t, fcc::build_tau(*f, 4, 2 * t, limits), limits);
  } else if (kind == "tau") {
    f = parse_function(cfg);
    const int t = require_t(cfg);
    const std::size_t lambda =
        cfg.lambda > 0 ? static_cast<std::size_t>(cfg.lambda) : std::max<std::size_t>(2, fcc::lambda0(*f, 2 * t, limits).lambda0);
    const auto tau = fcc::build_tau(*f, lambda, 2 * t, limits);
    enc = fcc::encoder_via_tau(*f, t, tau, fcc::explicit_code(static_cast<int>(lambda), t, f->params()), limits);
  } else if (kind == "msum") {
    const int t = require_t(cfg);
    f = fcc::FunctionSpec::modular_sum(ring(cfg), require_k(cfg));
    enc = fcc::encoder_modular_sum(f->params(), f->k(), t, limits);
  } else if (kind == "linear") {
    f = parse_function(cfg);
    if (cfg.generator_path.empty()) fcc::fail(fcc::ErrorKind::Domain, "--generator is required");
    const fcc::Matrix g = fcc::parse_matrix(fcc::read_file(cfg.generator_path));
    enc = fcc::encoder_linear(*f, g, limits);
    if (cfg.t >= 1) {
      const auto check = fcc::check_linear_construction(*f, g, limits);
      fcc::Provenance prov = enc->provenance();
      prov.details["t"] = cfg.t;
      prov.details["sufficient_for_t"] = fcc::linear_construction_sufficient(check, cfg.t);
      enc = fcc::SystematicEncoder(enc->params(), enc->k(), enc->r(), enc->parity_table(), std::move(prov));
    }
  } else {
    fcc::fail(fcc::ErrorKind::Domain, "unknown --kind '" + kind + "' (explicit, lambda4, tau, msum, linear)");
  }

  const json doc = fcc::to_json(*enc, f);
  if (!cfg.out_path.empty()) fcc::write_file(cfg.out_path, doc.dump(2) + "\n");
  json j{{"construction", enc->provenance().construction}, {"k", enc->k()}, {"r", enc->r()},
         {"function", f->describe()}, {"details", enc->provenance().details}};
  if (!cfg.out_path.empty()) j["written"] = cfg.out_path;
  emit(cfg, j);
  return 0;
}

struct LoadedEncoder {
  fcc::SystematicEncoder enc;
  fcc::FunctionSpec f;
};

LoadedEncoder load_encoder(const Config& cfg) {
  if (cfg.encoder_path.empty()) fcc::fail(fcc::ErrorKind::Domain, "--encoder is required");
  auto doc = fcc::encoder_from_json(fcc::parse_json(fcc::read_file(cfg.encoder_path), cfg.encoder_path));
  if (!cfg.function.empty()) {
    Config c = cfg;
    if (c.s == 0) c.s = doc.encoder.params().s;
    if (c.k == 0) c.k = static_cast<int>(doc.encoder.k());
    doc.function = parse_function(c);
  }
  if (!doc.function) fcc::fail(fcc::ErrorKind::Domain, "encoder file has no function; pass --function");
  return {std::move(doc.encoder), std::move(*doc.function)};
}

int cmd_verify(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto [enc, f] = load_encoder(cfg);
  const auto report = fcc::verify_fcc(enc, f, require_t(cfg), limits);
  json j{{"construction", enc.provenance().construction}, {"function", f.describe()}, {"k", enc.k()}, {"r", enc.r()}};
  j.update(fcc::to_json(report));
  if (enc.provenance().details.contains("injective_on_image"))
    j["injective_on_image"] = enc.provenance().details["injective_on_image"];
  emit(cfg, j);
  return 0;
}

int cmd_simulate(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto [enc, f] = load_encoder(cfg);
  const int t = require_t(cfg);
  const fcc::Word x = fcc::parse_word(cfg.x, enc.params());
  const fcc::Word e = cfg.e.empty() ? fcc::Word(enc.params(), std::vector<fcc::Symbol>(enc.length(), 0))
                                    : fcc::parse_word(cfg.e, enc.params());
  const auto out = fcc::simulate_channel(enc, f, t, x, e, limits);
  json j{{"x", fcc::to_json(x)},
         {"error", fcc::to_json(e)},
         {"received", fcc::to_json(out.received)},
         {"decoded_message", fcc::to_json(out.decoded)},
         {"value", fcc::to_json(out.value)},
         {"expected", fcc::to_json(f(x))},
         {"correct", out.value == f(x)}};
  if (out.warning) j["warning"] = *out.warning;
  emit(cfg, j);
  return 0;
}

int cmd_optimal(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto f = parse_function(cfg);
  const int t = require_t(cfg);
  const std::int64_t r_max = cfg.r_max >= 0 ? cfg.r_max : 4 * t + 2;
  const auto res = fcc::exact_optimal_redundancy(f, t, r_max, search_options(cfg), limits);
  json j{{"function", f.describe()}, {"s", f.params().s}, {"k", f.k()}, {"t", t}, {"r_max", r_max}};
  if (res.encoder && !cfg.out_path.empty()) {
    fcc::write_file(cfg.out_path, fcc::to_json(*res.encoder, f).dump(2) + "\n");
    j["written"] = cfg.out_path;
  }
  return report_search(cfg, j, res.search);
}

/// The Z_{2^s} summary rows: lambda-bounded upper bounds, the two Plotkin
/// bounds on the three-message witness, and the linear bound for the modular
/// sum viewed as linear, each next to an exact search where affordable.
int cmd_table(const Config& cfg, const fcc::EnumLimits& limits) {
  const auto p = ring(cfg);
  if (cfg.t_max < 1 || cfg.lambda_max < 2) fcc::fail(fcc::ErrorKind::Domain, "--t-max >= 1 and --lambda-max >= 2 are required");
  auto opts = search_options(cfg);
  opts.node_budget = std::min<std::uint64_t>(opts.node_budget, 2'000'000);
  const auto exact_or_dash = [](const fcc::SearchResult& r) { return r.exhausted ? json(r.value) : json("-"); };

  json rows = json::array();
  for (int t = 1; t <= cfg.t_max; ++t) {
    for (int lambda = 2; lambda <= cfg.lambda_max; ++lambda) {
      std::int64_t bound = fcc::upper_bound_from_lambda(lambda, t);
      if (lambda == 4) bound = std::min<std::int64_t>(bound, 2 * t);
      // N_h(lambda, 2t): lambda parities pairwise at distance >= 2t
      std::vector<int> entries(static_cast<std::size_t>(lambda * lambda), 2 * t);
      for (int i = 0; i < lambda; ++i) entries[static_cast<std::size_t>(i * lambda + i)] = 0;
      const fcc::RequirementMatrix d(static_cast<std::size_t>(lambda), entries);
      rows.push_back({{"row", "locally (" + std::to_string(lambda) + ",2t)"}, {"t", t}, {"lambda", lambda},
                      {"relation", lambda == 2 ? "=" : "<="}, {"bound", bound},
                      {"exact_Nh", exact_or_dash(fcc::exact_nh(d, p, bound, opts))}});
    }
    if (p.s == 2) {
      const auto w = fcc::RequirementMatrix::from_rows({{0, 2 * t, 2 * t}, {2 * t, 0, 2 * t - 1}, {2 * t, 2 * t - 1, 0}}, t);
      const auto exact = fcc::exact_nh(w, p, 3 * t + 2, opts);
      rows.push_back({{"row", "plotkin generic (M=3)"}, {"t", t}, {"ratio", fcc::to_string(fcc::plotkin_ratio_generic(w))},
                      {"bound", fcc::plotkin_bound_generic(w)}, {"exact_Nh", exact_or_dash(exact)}});
      rows.push_back({{"row", "plotkin Z4 (M=3, divisor M^2-1)"}, {"t", t},
                      {"ratio", fcc::to_string(fcc::plotkin_ratio_z4(w, p))}, {"bound", fcc::plotkin_bound_z4(w, p)},
                      {"exact_Nh", exact_or_dash(exact)}});
    }
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto f = fcc::FunctionSpec::modular_sum_as_linear(p, k);
      json row{{"row", "linear (msum, k=" + std::to_string(k) + ")"}, {"t", t}};
      try {
        const auto b = fcc::linear_plotkin_bound(f, t, limits);
        row["ratio"] = fcc::to_string(b.bound);
        row["bound"] = b.ceiling;
        row["exact_r"] = exact_or_dash(fcc::exact_optimal_redundancy(f, t, 2 * t + 2, opts, limits).search);
      } catch (const fcc::Error& err) {
        if (err.kind() != fcc::ErrorKind::ResourceLimit) throw;
        row["bound"] = "-";
        row["exact_r"] = "-";
      }
      rows.push_back(std::move(row));
    }
  }
  if (cfg.output == "json") {
    emit(cfg, {{"s", p.s}, {"rows", rows}});
    return 0;
  }
  for (const auto& row : rows) {
    std::cout << row["row"].get<std::string>() << "  t=" << row["t"];
    for (const char* key : {"relation", "ratio", "bound", "exact_Nh", "exact_r"})
      if (row.contains(key)) std::cout << "  " << key << "=" << (row[key].is_string() ? row[key].get<std::string>() : row[key].dump());
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Function-correcting codes under the homogeneous metric over Z_{2^s}"};
  app.require_subcommand(1);
  Config cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "human or json")->check(CLI::IsMember({"human", "json"}));
  };
  const auto ring_opt = [&](CLI::App* sub) { sub->add_option("--s", cfg.s, "ring exponent (Z_{2^s})"); };
  const auto fn_opts = [&](CLI::App* sub) {
    ring_opt(sub);
    sub->add_option("--k", cfg.k, "message length");
    sub->add_option("--function", cfg.function, "wh | wdist:T | msum | msum-linear | linear:PATH | table:PATH");
  };
  const auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "search node budget");
    sub->add_option("--rmax", cfg.r_max, "largest length to try");
  };

  auto* weight = app.add_subcommand("weight", "homogeneous weight of a vector");
  ring_opt(weight);
  weight->add_option("--vec", cfg.vecs, "comma-separated residues");
  common(weight);

  auto* dist = app.add_subcommand("dist", "homogeneous distance of two vectors");
  ring_opt(dist);
  dist->add_option("--vec", cfg.vecs, "comma-separated residues (twice)");
  common(dist);

  auto* ball = app.add_subcommand("ball", "list a homogeneous ball or sphere");
  ring_opt(ball);
  ball->add_option("--vec", cfg.vecs, "centre");
  ball->add_option("--rho", cfg.rho, "radius");
  ball->add_flag("--sphere", cfg.sphere, "only words at exactly distance rho");
  common(ball);

  auto* locality = app.add_subcommand("locality", "lambda_0 of a function at radius rho");
  fn_opts(locality);
  locality->add_option("--rho", cfg.rho, "radius");
  common(locality);

  auto* tau = app.add_subcommand("tau", "tau labelling under the natural order");
  fn_opts(tau);
  tau->add_option("--rho", cfg.rho, "radius");
  tau->add_option("--lambda", cfg.lambda, "label count (default lambda_0)");
  common(tau);

  auto* drm = app.add_subcommand("drm", "distance requirement matrix");
  fn_opts(drm);
  drm->add_option("--t", cfg.t, "errors to correct");
  drm->add_option("--vec", cfg.vecs, "messages (default: all)");
  drm->add_option("--out", cfg.out_path, "write the matrix JSON here");
  common(drm);

  auto* bound = app.add_subcommand("bound", "redundancy bounds");
  fn_opts(bound);
  bound->add_option("--mode", cfg.mode, "generic | z4 | msum | linear | upper | lower")->required();
  bound->add_option("--matrix", cfg.matrix_path, "requirement matrix JSON");
  bound->add_option("--t", cfg.t, "errors to correct");
  bound->add_option("--lambda", cfg.lambda, "locality parameter (upper mode)");
  bound->add_option("--vec", cfg.vecs, "messages (lower mode, default: all)");
  search_opts(bound);
  common(bound);

  auto* nh = app.add_subcommand("nh-search", "exact N_h of a requirement matrix");
  ring_opt(nh);
  nh->add_option("--matrix", cfg.matrix_path, "requirement matrix JSON");
  search_opts(nh);
  common(nh);

  auto* construct = app.add_subcommand("construct", "build a code or encoder");
  fn_opts(construct);
  construct->add_option("--kind", cfg.kind, "explicit | lambda4 | tau | msum | linear")->required();
  construct->add_option("--t", cfg.t, "errors to correct");
  construct->add_option("--lambda", cfg.lambda, "codeword count / label count");
  construct->add_option("--generator", cfg.generator_path, "generator matrix file (linear)");
  construct->add_option("--out", cfg.out_path, "write JSON here");
  common(construct);

  auto* verify = app.add_subcommand("verify", "exhaustive FCC check of an encoder");
  verify->add_option("--encoder", cfg.encoder_path, "encoder JSON")->required();
  verify->add_option("--t", cfg.t, "errors to correct");
  fn_opts(verify);
  common(verify);

  auto* simulate = app.add_subcommand("simulate", "send Enc(x) + e and decode f(x)");
  simulate->add_option("--encoder", cfg.encoder_path, "encoder JSON")->required();
  simulate->add_option("--t", cfg.t, "errors to correct");
  simulate->add_option("--x", cfg.x, "message");
  simulate->add_option("--e", cfg.e, "error vector of length k + r (default zero)");
  fn_opts(simulate);
  common(simulate);

  auto* optimal = app.add_subcommand("optimal", "exact optimal redundancy");
  fn_opts(optimal);
  optimal->add_option("--t", cfg.t, "errors to correct");
  optimal->add_option("--out", cfg.out_path, "write the induced encoder JSON here");
  search_opts(optimal);
  common(optimal);

  auto* table = app.add_subcommand("table", "summary rows for Z_{2^s}");
  ring_opt(table);
  table->add_option("--t-max", cfg.t_max, "largest t");
  table->add_option("--lambda-max", cfg.lambda_max, "largest lambda");
  table->add_option("--budget", cfg.budget, "search node budget per entry");
  common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    const fcc::EnumLimits limits = fcc::EnumLimits::from_env();
    if (*weight) return cmd_weight(cfg);
    if (*dist) return cmd_dist(cfg);
    if (*ball) return cmd_ball(cfg, limits);
    if (*locality) return cmd_locality(cfg, limits);
    if (*tau) return cmd_tau(cfg, limits);
    if (*drm) return cmd_drm(cfg, limits);
    if (*bound) return cmd_bound(cfg, limits);
    if (*nh) return cmd_nh_search(cfg);
    if (*construct) return cmd_construct(cfg, limits);
    if (*verify) return cmd_verify(cfg, limits);
    if (*simulate) return cmd_simulate(cfg, limits);
    if (*optimal) return cmd_optimal(cfg, limits);
    if (*table) return cmd_table(cfg, limits);
  } catch (const fcc::Error& e) {
    std::cerr << "fcc: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 1;
}
