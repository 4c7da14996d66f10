#include "grig/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "grig/full_group.hpp"
#include "grig/omega.hpp"
#include "grig/schreier.hpp"
#include "grig/subshift.hpp"
#include "grig/verify.hpp"
#include "json.hpp"

namespace grig::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string omega = "012";
  std::vector<std::string> omegas;
  std::string format;
  std::string output;
  std::size_t level = 3;
  std::size_t n = 2;
  std::size_t max_n = 64;
  std::size_t radius = 6;
  std::size_t count = 16;
  std::size_t max_level = 6;
  std::uint64_t max_order = 1024;
  std::uint64_t seed = 20140614;
  std::string ray;
  std::string word;
  std::string commutator;
  std::string dir;
  bool oracle = false;
  bool doubled = false;
  bool order = false;
  bool embed_check = false;
  bool quick = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ray_text(const Ray& r) { return r.prefix() + "(1)"; }

std::string status_text(bool ok) { return ok ? "pass" : "fail"; }

std::string status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw UsageError("unsupported --format " + format);
}

SubshiftPtr subshift_for(const OmegaSequence& omega) { return std::make_shared<const Subshift>(omega); }

int cmd_graph(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const auto glued = build_gamma_recursive(omega, c.level);
  if (c.oracle) {
    const auto orbit = build_gamma_orbit(omega, glued.vertex_count(), false);
    const bool match = glued == orbit;
    out << (match ? "MATCH" : "MISMATCH") << '\n';
    out << "omega=" << omega.to_string() << " level=" << c.level << " vertices=" << glued.vertex_count()
        << " edges=" << glued.edges().size() << '/' << orbit.edges().size() << '\n';
    return match ? kOk : kCheckFailed;
  }
  const std::string format = c.format.empty() ? "dot" : c.format;
  require_format(format, {"dot", "json"});
  if (format == "dot") {
    out << export_dot(glued);
    return kOk;
  }
  json edges = json::array();
  for (const auto& e : glued.sorted_edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label", std::string(1, to_char(e.label))}});
  }
  out << json{{"omega", omega.to_string()},
              {"level", c.level},
              {"vertices", glued.vertex_count()},
              {"edges", edges}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_language(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const Subshift x(omega);
  const auto& words = x.words(c.doubled ? Alphabet::Doubled : Alphabet::Base, c.n);
  const std::string format = c.format.empty() ? "text" : c.format;
  require_format(format, {"text", "json"});
  if (format == "json") {
    json list = json::array();
    for (const auto& w : words) list.push_back(render_word(w));
    out << json{{"omega", omega.to_string()},
                {"n", c.n},
                {"alphabet", c.doubled ? "doubled" : "base"},
                {"count", words.size()},
                {"words", list}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "omega=" << omega.to_string() << " n=" << c.n << " count=" << words.size() << '\n';
  for (const auto& w : words) out << render_word(w) << '\n';
  return kOk;
}

// Rows of (n, value, bound, pass) rendered as tsv or json.
struct BoundRow {
  std::size_t n;
  std::size_t value;
  std::size_t bound;
  bool pass;
};

int emit_bound_table(const std::vector<BoundRow>& rows, const std::string& value_name,
                     const std::string& bound_name, const std::string& omega, const std::string& format,
                     std::ostream& out) {
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (format == "json") {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"n", r.n}, {value_name, r.value}, {bound_name, r.bound}, {"status", status_text(r.pass)}});
    }
    out << json{{"omega", omega}, {"rows", list}, {"passed", all}}.dump(2) << '\n';
  } else {
    out << "n\t" << value_name << '\t' << bound_name << "\tstatus\n";
    for (const auto& r : rows) out << r.n << '\t' << r.value << '\t' << r.bound << '\t' << status_text(r.pass) << '\n';
  }
  return all ? kOk : kCheckFailed;
}

int cmd_complexity(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const Subshift x(omega);
  const std::string format = c.format.empty() ? "tsv" : c.format;
  require_format(format, {"tsv", "json"});
  std::vector<BoundRow> rows;
  for (std::size_t n = 1; n <= c.max_n; ++n) {
    const std::size_t rho = x.complexity(n);
    rows.push_back({n, rho, 6 * n, n + 1 <= rho && rho <= 6 * n});
  }
  return emit_bound_table(rows, "rho", "6n", omega.to_string(), format, out);
}

int cmd_double(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const auto x = subshift_for(omega);
  if (!c.commutator.empty()) {
    const bool ok = commutator_identity_check(parse_word(c.commutator), x);
    out << "delta(" << c.commutator << ") = g1 tau g1 tau: " << (ok ? "holds" : "fails") << '\n';
    return ok ? kOk : kCheckFailed;
  }
  const std::string format = c.format.empty() ? "tsv" : c.format;
  require_format(format, {"tsv", "json"});
  std::vector<BoundRow> rows;
  for (std::size_t n = 1; n <= c.max_n; ++n) {
    const std::size_t rho_y = x->double_language(n).size();
    const std::size_t bound = 2 * x->complexity((n + 1) / 2);
    rows.push_back({n, rho_y, bound, rho_y <= bound});
  }
  return emit_bound_table(rows, "rho_y", "2rho_x", omega.to_string(), format, out);
}

int cmd_orbit(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  if (!c.ray.empty()) {
    if (c.ray.find_first_not_of("01") != std::string::npos) throw UsageError("ray prefix must be binary");
    const Ray r(c.ray);
    const auto witness = orbit_contains(r, omega);
    const bool ok = witness.contained && apply_word(witness.word, Ray::rho(), omega) == r;
    out << "ray " << ray_text(r) << '\n';
    out << "index " << rho_index(r) << '\n';
    out << "word " << (witness.word.empty() ? "-" : to_string(witness.word)) << '\n';
    out << (ok ? "in orbit" : "NOT reached") << '\n';
    return ok ? kOk : kCheckFailed;
  }
  const std::string format = c.format.empty() ? "tsv" : c.format;
  require_format(format, {"tsv", "json"});
  const auto rays = rho_enumeration(c.count);
  if (format == "json") {
    json list = json::array();
    for (std::size_t j = 0; j < rays.size(); ++j) list.push_back({{"j", j}, {"ray", ray_text(rays[j])}});
    out << json{{"omega", omega.to_string()}, {"rays", list}}.dump(2) << '\n';
    return kOk;
  }
  out << "j\tray\n";
  for (std::size_t j = 0; j < rays.size(); ++j) out << j << '\t' << ray_text(rays[j]) << '\n';
  return kOk;
}

bool embedding_consistent(const GeneratorWord& w, const SubshiftPtr& x) {
  const bool trivial = is_trivial(w, x->omega());
  if (is_identity(embed_word(w, x)) != trivial) return false;
  if (injectivity_witness(w, x).has_value() == trivial) return false;
  for (std::size_t j = w.size() + 1; j <= w.size() + 64; ++j) {
    if (!schreier_consistency(w, x, j)) return false;
  }
  return true;
}

int cmd_word(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const auto w = parse_word(c.word);
  out << (is_trivial(w, omega) ? "trivial" : "nontrivial") << '\n';
  out << "normal form " << (normalize_word(w).empty() ? "-" : to_string(normalize_word(w))) << '\n';
  int code = kOk;
  if (c.order) {
    const auto k = element_order(w, omega, c.max_order);
    if (k) {
      out << "order " << *k << '\n';
    } else {
      out << "order > " << c.max_order << '\n';
    }
  }
  if (c.embed_check) {
    const bool ok = embedding_consistent(w, subshift_for(omega));
    out << "embedding " << (ok ? "consistent" : "inconsistent") << '\n';
    if (!ok) code = kCheckFailed;
  }
  return code;
}

int cmd_ball(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  const auto sizes = ball_sizes(omega, c.radius);
  const std::string format = c.format.empty() ? "tsv" : c.format;
  require_format(format, {"tsv", "json"});
  if (format == "json") {
    out << json{{"omega", omega.to_string()}, {"sizes", sizes}}.dump(2) << '\n';
    return kOk;
  }
  out << "n\tsize\n";
  for (std::size_t n = 0; n < sizes.size(); ++n) out << n << '\t' << sizes[n] << '\n';
  return kOk;
}

int cmd_embed(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  out << dump_element(embed_word(parse_word(c.word), subshift_for(omega)));
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  VerifyOptions options;
  for (const auto& seq : c.omegas) options.omegas.push_back(OmegaSequence::parse(seq));
  options.seed = c.seed;
  options.quick = c.quick;
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"json", "tsv"});
  const VerifyReport report = run_verification(options);
  if (format == "json") {
    json checks = json::array();
    for (const auto& r : report.checks) {
      checks.push_back({{"id", r.id},
                        {"omega", r.omega},
                        {"name", r.name},
                        {"status", status_text(r.status)},
                        {"detail", r.detail}});
    }
    out << json{{"seed", report.seed}, {"quick", report.quick}, {"passed", report.passed()}, {"checks", checks}}.dump(2)
        << '\n';
  } else {
    out << "id\tomega\tstatus\tname\tdetail\n";
    for (const auto& r : report.checks) {
      out << r.id << '\t' << r.omega << '\t' << status_text(r.status) << '\t' << r.name << '\t' << r.detail << '\n';
    }
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_export(const Config& c, std::ostream& out) {
  const auto omega = OmegaSequence::parse(c.omega);
  std::string stem = omega.to_string();
  std::replace(stem.begin(), stem.end(), ':', '_');
  std::filesystem::create_directories(c.dir);
  for (std::size_t level = 1; level <= c.max_level; ++level) {
    const auto path = std::filesystem::path(c.dir) / ("omega" + stem + "_level" + std::to_string(level) + ".dot");
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << export_dot(build_gamma_recursive(omega, level));
    out << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grigorchuk groups, Schreier graphs and their topological full groups"};
  app.require_subcommand(1);
  Config c;

  auto add_omega = [&](CLI::App* sub) { sub->add_option("--omega", c.omega, "sequence [preperiod:]period")->capture_default_str(); };
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output, "write to file instead of stdout"); };

  std::vector<std::pair<CLI::App*, std::function<int(const Config&, std::ostream&)>>> commands;

  auto* graph = app.add_subcommand("graph", "finite Schreier graph Gamma_n");
  add_omega(graph);
  add_output(graph);
  graph->add_option("--level", c.level, "n, giving 2^(n+1) vertices")->check(CLI::Range(1, 20))->capture_default_str();
  graph->add_option("--format", c.format, "dot or json");
  graph->add_flag("--oracle", c.oracle, "compare gluing with the generator action");
  commands.emplace_back(graph, cmd_graph);

  auto* language = app.add_subcommand("language", "admissible words of length n");
  add_omega(language);
  add_output(language);
  language->add_option("--n", c.n, "word length")->check(CLI::Range(0, 4096))->capture_default_str();
  language->add_option("--format", c.format, "text or json");
  language->add_flag("--double", c.doubled, "words of the doubled subshift");
  commands.emplace_back(language, cmd_language);

  auto* complexity = app.add_subcommand("complexity", "complexity table against n+1 and 6n");
  add_omega(complexity);
  add_output(complexity);
  complexity->add_option("--max-n", c.max_n, "largest n")->check(CLI::Range(1, 4096))->capture_default_str();
  complexity->add_option("--format", c.format, "tsv or json");
  commands.emplace_back(complexity, cmd_complexity);

  auto* orbit = app.add_subcommand("orbit", "Gray code enumeration of the orbit of 111...");
  add_omega(orbit);
  add_output(orbit);
  orbit->add_option("--ray", c.ray, "binary prefix of a ray; prints its index and a word reaching it");
  orbit->add_option("--count", c.count, "number of rays to list")->check(CLI::Range(1, 1 << 20))->capture_default_str();
  orbit->add_option("--format", c.format, "tsv or json");
  commands.emplace_back(orbit, cmd_orbit);

  auto* word = app.add_subcommand("word", "word problem, order and embedding check");
  add_omega(word);
  add_output(word);
  word->add_option("word", c.word, "word over a, b, c, d")->required();
  word->add_flag("--order", c.order, "print the order");
  word->add_option("--max-order", c.max_order, "order search bound")->check(CLI::Range(1, 1 << 20))->capture_default_str();
  word->add_flag("--embed-check", c.embed_check, "compare the word with its image in the full group");
  commands.emplace_back(word, cmd_word);

  auto* ball = app.add_subcommand("ball", "ball sizes in the Cayley graph");
  add_omega(ball);
  add_output(ball);
  ball->add_option("--radius", c.radius, "largest radius")->check(CLI::Range(0, 12))->capture_default_str();
  ball->add_option("--format", c.format, "tsv or json");
  commands.emplace_back(ball, cmd_ball);

  auto* embed = app.add_subcommand("embed", "cocycle table of the image of a word");
  add_omega(embed);
  add_output(embed);
  embed->add_option("word", c.word, "word over a, b, c, d")->required();
  commands.emplace_back(embed, cmd_embed);

  auto* dbl = app.add_subcommand("double", "doubled subshift: complexity bound or commutator identity");
  add_omega(dbl);
  add_output(dbl);
  dbl->add_option("--max-n", c.max_n, "largest n")->check(CLI::Range(1, 1024))->capture_default_str();
  dbl->add_option("--commutator", c.commutator, "involution word w; checks delta(w) = g1 tau g1 tau");
  dbl->add_option("--format", c.format, "tsv or json");
  commands.emplace_back(dbl, cmd_double);

  auto* verify = app.add_subcommand("verify", "run the check battery");
  add_output(verify);
  verify->add_option("--omega", c.omegas, "sequence to check (repeatable; default suite otherwise)");
  verify->add_flag("--quick", c.quick, "smaller caps");
  verify->add_option("--seed", c.seed, "random seed")->capture_default_str();
  verify->add_option("--format", c.format, "json or tsv");
  commands.emplace_back(verify, cmd_verify);

  auto* exp = app.add_subcommand("export", "write Gamma_1 .. Gamma_L as dot files");
  add_omega(exp);
  exp->add_option("--max-level", c.max_level, "largest level")->check(CLI::Range(1, 16))->capture_default_str();
  exp->add_option("--dir", c.dir, "output directory")->required();
  commands.emplace_back(exp, cmd_export);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      if (c.output.empty()) return handler(c, out);
      std::ostringstream buffer;
      const int code = handler(c, buffer);
      std::ofstream file(c.output);
      if (!file) {
        err << "error: cannot write " << c.output << '\n';
        return kUsage;
      }
      file << buffer.str();
      return code;
    }
  } catch (const UnsupportedOmega& e) {
    err << "unsupported: " << e.what() << '\n'
        << "eventually constant sequences give a group with an element of infinite order and no subshift\n";
    return kUnsupported;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace grig::cli
