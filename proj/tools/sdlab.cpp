// sdlab: command-line front end. Reports are JSON objects carrying the
// command, its configuration, the library version and the payload; exact
// values are "p/q" strings with a decimal rendering alongside.
//
// Exit codes: 0 success, 1 a verified claim does not hold, 2 usage or
// resource errors.
#include "sdlab/sdlab.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sdlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFalse = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string format;
  std::uint64_t max_cells = kDefaultCellCap;
  int max_depth = 32;
  std::uint64_t seed = 0;
  bool seed_used = false;
};

json exact(const Rational& x) { return {{"exact", to_string(x)}, {"decimal", to_decimal(x)}}; }

json exact_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json decimal_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

json int_list(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json envelope(const RunConfig& cfg) {
  json cfg_json = {{"input", cfg.input},
                   {"format", cfg.format},
                   {"max_cells", cfg.max_cells},
                   {"max_depth", cfg.max_depth}};
  if (cfg.seed_used) cfg_json["seed"] = cfg.seed;
  return {{"command", cfg.command}, {"version", kVersion}, {"config", cfg_json}};
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error("cannot write " + cfg.output);
  out << text;
}

void write_json(const RunConfig& cfg, const json& doc) { write_output(cfg, doc.dump(2) + "\n"); }

ComplexFile load_complex(const std::string& path) {
  if (path.empty()) throw Error("--input is required");
  return complex_from_json(read_json_file(path));
}

PolynomialObservable load_observable(const std::string& path, int ambient) {
  if (path.empty()) return PolynomialObservable::constant(ambient, Rational(1));
  auto phi = observable_from_json(read_json_file(path));
  if (phi.ambient_dim() != ambient)
    throw Error("observable has ambient dimension " + std::to_string(phi.ambient_dim()) + " but the input needs " +
                std::to_string(ambient));
  return phi;
}

void check_depth(const RunConfig& cfg, int depth) {
  if (depth < 0) throw Error("depth must be non-negative");
  if (depth > cfg.max_depth)
    throw CapExceeded("depth " + std::to_string(depth) + " exceeds --max-depth " + std::to_string(cfg.max_depth));
}

json verifier_json(const VerifierReport& rep) {
  json j = {{"claim", rep.claim}, {"applicable", rep.applicable}, {"holds", rep.holds}};
  j["residual"] = coefficient_strings(rep.residual);
  if (rep.witness) j["witness"] = *rep.witness;
  j["warnings"] = rep.warnings;
  if (rep.polynomial) j["polynomial"] = coefficient_strings(*rep.polynomial);
  if (rep.roots) {
    json roots = json::array();
    for (const auto& r : rep.roots->intervals)
      roots.push_back({{"lo", to_string(r.lo)},
                       {"hi", to_string(r.hi)},
                       {"exact", r.exact()},
                       {"approx", to_decimal(r.midpoint(), 12)},
                       {"multiplicity", r.multiplicity}});
    j["real_roots"] = roots;
    j["real_root_count"] = rep.roots->sturm_total;
  }
  return j;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

// ---- subcommands ------------------------------------------------------------

int run_subdivide(const RunConfig& cfg, int depth, const std::string& emit) {
  check_depth(cfg, depth);
  const auto in = load_complex(cfg.input);
  if (emit == "fvector") {
    const FaceVector f = streamed_face_vector(in.complex, depth, cfg.max_cells);
    if (cfg.format == "csv") {
      write_output(cfg, csv_line(coefficient_strings(IntPolynomial(f.counts))));
      return kExitOk;
    }
    json doc = envelope(cfg);
    doc["depth"] = depth;
    doc["fvector"] = int_list(f.counts);
    write_json(cfg, doc);
    return kExitOk;
  }
  const SimplicialComplex sd = iterate_subdivision(in.complex, depth, cfg.max_cells);
  if (cfg.format == "csv") {
    std::string text;
    for (int p = 0; p <= sd.dim(); ++p)
      for (const auto& s : sd.faces(p)) {
        std::vector<std::string> cells;
        for (VertexId v : s.vertices()) cells.push_back(std::to_string(v));
        text += csv_line(cells);
      }
    write_output(cfg, text);
    return kExitOk;
  }
  json doc = envelope(cfg);
  doc["depth"] = depth;
  doc["fvector"] = int_list(face_vector(sd).counts);
  json faces = json::array();
  for (int p = 0; p <= sd.dim(); ++p)
    for (const auto& s : sd.faces(p)) faces.push_back(s.vertices());
  doc["faces"] = std::move(faces);
  write_json(cfg, doc);
  return kExitOk;
}

int run_fvector(const RunConfig& cfg, int depth, const std::string& method) {
  check_depth(cfg, depth);
  const auto in = load_complex(cfg.input);
  FaceVector f;
  if (method == "stream")
    f = streamed_face_vector(in.complex, depth, cfg.max_cells);
  else if (method == "enumerate")
    f = face_vector(iterate_subdivision(in.complex, depth, cfg.max_cells));
  else
    f = transfer(face_vector(in.complex), in.complex.dim(), depth);
  if (cfg.format == "csv") {
    write_output(cfg, csv_line(coefficient_strings(IntPolynomial(f.counts))));
    return kExitOk;
  }
  json doc = envelope(cfg);
  doc["depth"] = depth;
  doc["method"] = method;
  doc["fvector"] = int_list(f.counts);
  doc["euler_characteristic"] = euler_characteristic(f).str();
  write_json(cfg, doc);
  return kExitOk;
}

int run_lambda(const RunConfig& cfg, int n, const std::string& form) {
  if (n < 0) throw Error("--n must be non-negative");
  const LambdaMatrix lam = form == "closed" ? lambda_closed_form(n + 1) : lambda_recursive(n + 1);
  // Lambda_n has entry (i, j) = lambda_{i+1, j+1}.
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i <= n; ++i) {
    std::vector<std::string> row;
    for (int j = 0; j <= n; ++j) row.push_back(lam(i + 1, j + 1).str());
    rows.push_back(std::move(row));
  }
  if (cfg.format == "csv") {
    std::string text;
    for (const auto& r : rows) text += csv_line(r);
    write_output(cfg, text);
    return kExitOk;
  }
  json doc = envelope(cfg);
  doc["n"] = n;
  doc["form"] = form;
  doc["lambda"] = rows;
  write_json(cfg, doc);
  return kExitOk;
}

int run_qcoeffs(const RunConfig& cfg, int n, const std::string& method, bool check_roots) {
  if (n < 0) throw Error("--n must be non-negative");
  if (method == "partition" && n > 20) throw CapExceeded("partition enumeration is capped at n <= 20; use --method solve");
  const QVector q = method == "partition" ? q_partition(n) : q_solve(n);
  std::optional<LimitRootReport> roots;
  if (check_roots) {
    if (n < 1) throw Error("--check-roots needs n >= 1");
    roots = analyze_limit_roots(n);
  }
  const bool ok = !roots || (roots->simple && roots->all_real && roots->contained && roots->symmetric &&
                             (n % 2 == 1 || roots->vanishes_at_minus_half));
  if (cfg.format == "csv") {
    std::string text = "p,q,decimal\n";
    for (int p = 0; p <= n; ++p) text += csv_line({std::to_string(p), to_string(q[p]), to_decimal(q[p])});
    write_output(cfg, text);
    return ok ? kExitOk : kExitClaimFalse;
  }
  json doc = envelope(cfg);
  doc["n"] = n;
  doc["method"] = method;
  doc["q"] = exact_list(q.q);
  doc["q_decimal"] = decimal_list(q.q);
  if (roots) {
    json r = json::array();
    for (const auto& iv : roots->roots.intervals)
      r.push_back({{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"exact", iv.exact()},
                   {"approx", to_decimal(iv.midpoint(), 12)}});
    doc["roots"] = {{"polynomial", "T q_n(T)"},
                    {"intervals", r},
                    {"simple", roots->simple},
                    {"all_real", roots->all_real},
                    {"in_minus_one_zero", roots->contained},
                    {"symmetric", roots->symmetric},
                    {"max_symmetry_defect", to_decimal(roots->max_symmetry_defect, 18)},
                    {"vanishes_at_minus_half", roots->vanishes_at_minus_half},
                    {"holds", ok}};
  }
  write_json(cfg, doc);
  return ok ? kExitOk : kExitClaimFalse;
}

int run_verify(const RunConfig& cfg, const std::string& claim, int n) {
  VerifierReport rep;
  if (claim == "asymptotic-ds" || claim == "sphere-roots") {
    if (n < 1) throw Error("--claim " + claim + " needs --n N with N >= 1");
    rep = claim == "asymptotic-ds" ? asymptotic_dehn_sommerville(n) : sphere_root_analysis(n);
  } else {
    const auto in = load_complex(cfg.input);
    if (claim == "macdonald") rep = macdonald_symmetry(in.complex);
    else if (claim == "chi-half") rep = chi_at_minus_half(in.complex);
    else if (claim == "ds") rep = dehn_sommerville(in.complex);
    else if (claim == "r-roots") rep = r_roots_in_unit_interval(in.complex);
    else rep = odd_symmetry(in.complex);
  }
  json doc = envelope(cfg);
  if (n > 0) doc["n"] = n;
  doc["report"] = verifier_json(rep);
  write_json(cfg, doc);
  if (!rep.applicable) {
    std::cerr << "sdlab: claim '" << claim << "' does not apply to this input: "
              << (rep.warnings.empty() ? "" : rep.warnings.front()) << "\n";
    return kExitUsage;
  }
  return rep.holds ? kExitOk : kExitClaimFalse;
}

int run_converge(const RunConfig& cfg, const std::string& harness, int p, int dmin, int dmax,
                 const std::string& phi_path, const std::string& summary_path) {
  check_depth(cfg, dmax);
  if (dmin < 0 || dmin > dmax) throw Error("need 0 <= --dmin <= --dmax");
  const auto in = load_complex(cfg.input);
  if (!in.embedding) throw Error("converge needs an input with \"coordinates\" (an embedded complex)");
  const EmbeddedComplex& e = *in.embedding;
  const auto phi = load_observable(phi_path, e.ambient_dim());
  std::vector<ConvergenceReport> reps;
  if (harness == "gamma") reps.push_back(converge_gamma(e, p, dmin, dmax, phi, cfg.max_cells));
  else if (harness == "links") reps = converge_links(e, p, dmin, dmax, phi, cfg.max_cells);
  else if (harness == "blocks") reps = converge_blocks(e, p, dmin, dmax, phi, cfg.max_cells);
  else reps.push_back(converge_top_links(e, p, dmin, dmax, phi, cfg.max_cells));

  const bool multi = harness == "links" || harness == "blocks";
  bool ok = true;
  json summary = envelope(cfg);
  summary["harness"] = harness;
  summary["p"] = p;
  summary["observable"] = observable_to_json(phi);
  json quantities = json::array();
  for (std::size_t l = 0; l < reps.size(); ++l) {
    const auto& r = reps[l];
    const bool exact_limit = r.exact_everywhere();
    const bool monotone = r.strictly_decreasing_tail(std::min<std::size_t>(3, r.rows.size()));
    if (!exact_limit && !monotone) ok = false;
    json rows = json::array();
    for (const auto& row : r.rows) {
      json jr = {{"d", row.depth}, {"value", exact(row.value)}, {"error", exact(row.error)}};
      jr["ratio"] = row.ratio ? exact(*row.ratio) : json(nullptr);
      rows.push_back(std::move(jr));
    }
    json q = {{"quantity", r.quantity}, {"limit", r.limit}, {"target", exact(r.target)}};
    if (multi) q["l"] = l;
    q["exact_at_every_depth"] = exact_limit;
    q["error_strictly_decreasing_last3"] = monotone;
    q["rows"] = std::move(rows);
    quantities.push_back(std::move(q));
  }
  summary["quantities"] = std::move(quantities);
  summary["holds"] = ok;

  if (cfg.format == "csv") {
    std::string text = multi ? "l,d,value,target,error,ratio\n" : "d,value,target,error,ratio\n";
    for (std::size_t l = 0; l < reps.size(); ++l)
      for (const auto& row : reps[l].rows) {
        std::vector<std::string> cells;
        if (multi) cells.push_back(std::to_string(l));
        cells.push_back(std::to_string(row.depth));
        cells.push_back(to_decimal(row.value));
        cells.push_back(to_decimal(reps[l].target));
        cells.push_back(to_decimal(row.error));
        cells.push_back(row.ratio ? to_decimal(*row.ratio) : "");
        text += csv_line(cells);
      }
    write_output(cfg, text);
    if (!summary_path.empty()) {
      std::ofstream out(summary_path, std::ios::binary);
      if (!out) throw Error("cannot write " + summary_path);
      out << summary.dump(2) << "\n";
    }
  } else {
    write_json(cfg, summary);
  }
  return ok ? kExitOk : kExitClaimFalse;
}

int run_sample(const RunConfig& cfg, int n, int depth, std::uint64_t samples, const std::string& phi_path) {
  check_depth(cfg, depth);
  if (n < 1) throw Error("--n must be at least 1");
  if (samples < 1) throw Error("--samples must be at least 1");
  if (detail::saturating_mul(samples, static_cast<std::uint64_t>(depth)) > cfg.max_cells)
    throw CapExceeded("samples x depth exceeds the cap of " + std::to_string(cfg.max_cells) +
                      " chart applications; raise --max-cells or SDLAB_MAX_CELLS");
  const auto phi = load_observable(phi_path, n);
  const auto est = phi_mc_integral(n, depth, samples, phi, cfg.seed);
  const Rational target = integrate_volume(embedded_standard_simplex(n), phi);
  if (cfg.format == "csv") {
    std::string text = "seed,samples,depth,mean,stderr,target\n";
    std::ostringstream m, s;
    m.precision(15);
    s.precision(15);
    m << est.mean;
    s << est.stderr_;
    text += csv_line({std::to_string(est.seed), std::to_string(samples), std::to_string(depth), m.str(), s.str(),
                      to_decimal(target)});
    write_output(cfg, text);
    return kExitOk;
  }
  json doc = envelope(cfg);
  doc["n"] = n;
  doc["depth"] = depth;
  doc["samples"] = samples;
  doc["seed"] = est.seed;
  doc["observable"] = observable_to_json(phi);
  doc["mean"] = est.mean;
  doc["stderr"] = est.stderr_;
  doc["sample_mean_exact"] = to_string(est.exact_mean);
  doc["volume_integral"] = exact(target);
  doc["z_score"] = est.stderr_ > 0 ? json((est.mean - to_double(target)) / est.stderr_) : json(nullptr);
  write_json(cfg, doc);
  return kExitOk;
}

int run_corpus(const RunConfig& cfg, const std::string& action, const std::string& name) {
  if (action == "list") {
    if (cfg.format == "csv") {
      std::string text = "name,dim,closed_manifold,description\n";
      for (const auto& e : corpus_entries())
        text += csv_line({e.name, std::to_string(e.build().dim()), e.manifold ? "true" : "false", e.description});
      write_output(cfg, text);
      return kExitOk;
    }
    json doc = envelope(cfg);
    json list = json::array();
    for (const auto& e : corpus_entries()) {
      const auto k = e.build();
      list.push_back({{"name", e.name},
                      {"dim", k.dim()},
                      {"closed_manifold", e.manifold},
                      {"embedded", static_cast<bool>(e.embed())},
                      {"fvector", int_list(face_vector(k).counts)},
                      {"description", e.description}});
    }
    doc["complexes"] = std::move(list);
    write_json(cfg, doc);
    return kExitOk;
  }
  if (name.empty()) throw Error("corpus emit needs a complex name");
  write_json(cfg, corpus_json(name));
  return kExitOk;
}

std::uint64_t env_cap() {
  const char* v = std::getenv("SDLAB_MAX_CELLS");
  if (!v || !*v) return kDefaultCellCap;
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(std::string("SDLAB_MAX_CELLS must be a positive integer, got '") + v + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdlab: exact combinatorics of iterated barycentric subdivision"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format;
  std::optional<std::uint64_t> max_cells;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  app.add_option("--max-cells", max_cells, "Cap on visited simplices (default 10^7 or SDLAB_MAX_CELLS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-depth", cfg.max_depth, "Cap on subdivision or sampling depth")->check(CLI::NonNegativeNumber);

  int depth = 1, n = 0, p = 0, dmin = 1, dmax = 4;
  std::uint64_t samples = 10000;
  std::string emit = "fvector", method, form = "recursive", claim, harness, phi_path, summary_path, action, name;
  bool check_roots = false;

  auto* sub = app.add_subcommand("subdivide", "Iterated barycentric subdivision");
  sub->add_option("--input", cfg.input, "Complex JSON")->required();
  sub->add_option("--depth", depth, "Subdivision depth d");
  sub->add_option("--emit", emit, "faces or fvector")->check(CLI::IsMember({"faces", "fvector"}));

  auto* fvec = app.add_subcommand("fvector", "Face vector of Sd^d(K)");
  fvec->add_option("--input", cfg.input, "Complex JSON")->required();
  fvec->add_option("--depth", depth, "Subdivision depth d");
  method = "stream";
  fvec->add_option("--method", method, "stream, enumerate or transfer")
      ->check(CLI::IsMember({"stream", "enumerate", "transfer"}));

  auto* lam = app.add_subcommand("lambda", "Transfer matrix Lambda_n");
  lam->add_option("--n", n, "Dimension n")->required();
  lam->add_option("--form", form, "recursive or closed")->check(CLI::IsMember({"recursive", "closed"}));

  std::string qmethod = "solve";
  auto* qc = app.add_subcommand("qcoeffs", "Limit coefficients q_{p,n}");
  qc->add_option("--n", n, "Dimension n")->required();
  qc->add_option("--method", qmethod, "solve or partition")->check(CLI::IsMember({"solve", "partition"}));
  qc->add_flag("--check-roots", check_roots, "Isolate and check the real roots of T q_n(T)");

  auto* ver = app.add_subcommand("verify", "Exact verification of an identity");
  ver->add_option("--claim", claim, "Claim to verify")
      ->required()
      ->check(CLI::IsMember({"macdonald", "chi-half", "ds", "asymptotic-ds", "sphere-roots", "r-roots", "odd-symmetry"}));
  ver->add_option("--input", cfg.input, "Complex JSON");
  ver->add_option("--n", n, "Dimension for asymptotic-ds and sphere-roots");

  auto* conv = app.add_subcommand("converge", "Convergence diagnostics for the subdivision measures");
  conv->add_option("--harness", harness, "gamma, links, blocks or fp-delta")
      ->required()
      ->check(CLI::IsMember({"gamma", "links", "blocks", "fp-delta"}));
  conv->add_option("--input", cfg.input, "Embedded complex JSON")->required();
  conv->add_option("--p", p, "Face dimension p");
  conv->add_option("--dmin", dmin, "First depth");
  conv->add_option("--dmax", dmax, "Last depth");
  conv->add_option("--phi", phi_path, "Observable JSON (default: the constant 1)");
  conv->add_option("--summary", summary_path, "With --format csv, also write the JSON summary here");

  std::uint64_t seed = 1;
  auto* samp = app.add_subcommand("sample", "Monte Carlo integration through random chart words");
  samp->add_option("--n", n, "Dimension n")->required();
  samp->add_option("--depth", depth, "Word length d")->required();
  samp->add_option("--samples", samples, "Number of samples");
  samp->add_option("--phi", phi_path, "Observable JSON (default: the constant 1)");
  samp->add_option("--seed", seed, "64-bit seed");

  auto* corp = app.add_subcommand("corpus", "The shipped complexes");
  corp->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  corp->add_option("name", name, "Complex name for emit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.max_cells = max_cells ? *max_cells : env_cap();
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    const bool csv_default = cfg.command == "fvector" || cfg.command == "converge";
    cfg.format = !format.empty() ? format : (csv_default ? "csv" : "json");
    if (cfg.command == "sample") {
      cfg.seed = seed;
      cfg.seed_used = true;
    }
    if (cfg.command == "subdivide") return run_subdivide(cfg, depth, emit);
    if (cfg.command == "fvector") return run_fvector(cfg, depth, method);
    if (cfg.command == "lambda") return run_lambda(cfg, n, form);
    if (cfg.command == "qcoeffs") return run_qcoeffs(cfg, n, qmethod, check_roots);
    if (cfg.command == "verify") return run_verify(cfg, claim, n);
    if (cfg.command == "converge") return run_converge(cfg, harness, p, dmin, dmax, phi_path, summary_path);
    if (cfg.command == "sample") return run_sample(cfg, n, depth, samples, phi_path);
    return run_corpus(cfg, action, name);
  } catch (const CapExceeded& e) {
    std::cerr << "sdlab: resource cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "sdlab: error: " << e.what() << "\n";
    return kExitUsage;
  }
}
