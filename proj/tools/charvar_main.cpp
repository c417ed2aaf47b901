// Command-line front end: exact character-variety invariants of F2 and of
// presented two-generator groups. All mathematical output goes to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 input error,
// 2 mathematically degenerate input, 3 internal invariant violation.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charvar/charvar.hpp"

namespace {

using namespace charvar;

std::map<std::string, Rat> parse_assignments(const std::vector<std::string>& kvs) {
  std::map<std::string, Rat> out;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw input_error("expected var=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    if (key != "x" && key != "y" && key != "z")
      throw input_error("unknown coordinate '" + key + "'");
    if (out.count(key)) throw input_error("duplicate coordinate '" + key + "'");
    out.emplace(key, rat_from_string(kv.substr(eq + 1)));
  }
  for (const std::string v : {"x", "y", "z"})
    if (!out.count(v)) throw input_error("missing coordinate '" + v + "'");
  return out;
}

void require_ab_generators(const Presentation& p) {
  const auto gens = p.generator_set();
  if (gens != std::set<char>{'a', 'b'})
    throw input_error("this command needs generators exactly {a, b}");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

void run_trace(const std::string& word) {
  std::cout << trace_polynomial(word_ab(word)).to_string() << "\n";
}

void run_delta(const std::string& alpha, const std::string& beta) {
  std::cout << delta(word_ab(alpha), word_ab(beta)).to_string() << "\n";
}

void run_reconstruct(const std::string& word, const std::vector<std::string>& char_kvs) {
  const Word w = word_ab(word);
  if (char_kvs.empty()) {
    const auto sys = tautological_saito_system();
    std::cout << sys.reconstruct(w).to_string() << "\n";
  } else {
    const auto pt = parse_assignments(char_kvs);
    const auto sys = specialized_saito_system(pt.at("x"), pt.at("y"), pt.at("z"));
    std::cout << sys.reconstruct(w).to_string() << "\n";
  }
}

void print_cohomology(const std::vector<int>& h, const Presentation& p) {
  for (size_t i = 0; i < 3; ++i)
    std::cout << "h^" << i << " = " << (i < h.size() ? h[i] : 0) << "\n";
  if (!p.boundary.empty()) std::cout << "d = " << expected_h1_dimension(p) << "\n";
}

bool is_product_circle_file(const Presentation& p) {
  if (!p.is_free() || p.boundary.empty()) return false;
  for (const auto& b : p.boundary)
    if (b.genus != 1) return false;
  return true;
}

void run_cohomology(const std::string& file) {
  const InputFile in = load_input_file(file);
  const Presentation& p = in.presentation;
  require_ab_generators(p);

  std::vector<int> h;
  if (!p.relators.empty()) {
    if (!in.point)
      throw input_error("presented groups need a 'point' entry (specialized character)");
    const auto& pt = *in.point;
    if (delta(word_ab("a"), word_ab("b")).specialize(pt) == 0)
      throw degenerate_error("character is reducible: Delta vanishes at the point");
    const auto rho = specialized_rep(pt.at("x"), pt.at("y"), pt.at("z"));
    h = cohomology_dims(presentation_complex(p, rho));
  } else if (is_product_circle_file(p)) {
    if (in.point) {
      const auto& pt = *in.point;
      const auto rho = specialized_rep(pt.at("x"), pt.at("y"), pt.at("z"));
      h = cohomology_dims(product_circle_complex(p, rho, +1));
    } else {
      h = cohomology_dims(product_circle_complex(p, tautological_rep(), +1));
    }
  } else {
    if (in.point) {
      const auto& pt = *in.point;
      const auto rho = specialized_rep(pt.at("x"), pt.at("y"), pt.at("z"));
      h = cohomology_dims(presentation_complex(p, rho));
    } else {
      h = cohomology_dims(presentation_complex(p, tautological_rep()));
    }
  }
  print_cohomology(h, p);
}

void run_torsion(const std::string& kind_str, const std::string& file, int sign,
                 bool normalized) {
  ManifoldKind kind;
  if (kind_str == "handlebody") {
    kind = ManifoldKind::handlebody;
  } else if (kind_str == "product-circle") {
    kind = ManifoldKind::product_circle;
  } else {
    throw input_error("unknown kind '" + kind_str + "'");
  }

  Presentation p{{'a', 'b'}, {}, {}};
  std::vector<Word> boundary;
  if (!file.empty()) {
    const InputFile in = load_input_file(file);
    require_ab_generators(in.presentation);
    if (!in.presentation.is_free())
      throw input_error("torsion input must be a free presentation");
    p = in.presentation;
    for (const auto& b : in.presentation.boundary) boundary.push_back(b.word);
  }
  std::cout << torsion_form(p, kind, sign, boundary, normalized).to_string() << "\n";
}

void run_fibered(const std::string& file, const std::vector<std::string>& point_kvs) {
  const InputFile in = load_input_file(file);
  require_ab_generators(in.presentation);
  if (!in.phi) throw input_error("fibered input needs a 'phi' entry");
  if (in.presentation.boundary.empty())
    throw input_error("fibered input needs boundary curves");
  std::vector<Word> boundary;
  for (const auto& b : in.presentation.boundary) boundary.push_back(b.word);
  const FiberedSpec spec =
      build_fibered_spec(in.phi->at('a'), in.phi->at('b'), boundary);

  if (!point_kvs.empty()) {
    const auto pt = parse_assignments(point_kvs);
    const FiberedAtPoint r = fibered_torsion(spec, pt);
    std::cout << "det((J - I)|W) = " << rat_to_string(r.restricted_det) << "\n";
    const Rat v = r.value < 0 ? Rat(-r.value) : r.value;
    std::cout << "T = " << rat_to_string(v) << " " << join(r.labels, "^")
              << " (up to sign)\n";
  } else {
    const FiberedSymbolic r = fibered_torsion(spec);
    if (r.identity_form) {
      std::cout << r.identity_form->to_string() << "\n";
      return;
    }
    std::cout << "jacobian = " << r.jacobian.to_string() << "\n";
    for (size_t i = 0; i < spec.boundary.size(); ++i) {
      std::vector<std::string> comps;
      for (const MPoly& g : r.gradients[i]) comps.push_back(g.to_string());
      std::cout << "grad Y_" << spec.boundary[i].to_string() << " = ["
                << join(comps, ", ") << "]\n";
    }
    std::cout << "wedge = " << join(r.labels, "^") << "\n";
  }
}

int run_selfcheck(uint64_t seed, int words, int trials, bool tamper) {
  SelfCheckOptions opt;
  opt.seed = seed;
  opt.max_word_length = words;
  opt.override_trials = trials;
  opt.tamper = tamper;
  const SelfCheckResult res = run_selfcheck(opt, std::cout);
  if (!res.ok) {
    std::cerr << "error: " << res.counterexample << "\n";
    return 3;
  }
  std::cout << "selfcheck: PASS (seed " << seed << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact SL2 character-variety invariants: trace polynomials, "
               "Saito reconstruction, twisted cohomology, Reidemeister torsion"};
  app.require_subcommand(1);

  std::string word, alpha, beta, file, kind, sign_str = "+1";
  std::vector<std::string> char_kvs, point_kvs;
  bool normalized = false, tamper = false;
  uint64_t seed = 1;
  int words_len = 10, trials = -1;

  auto* trace_cmd = app.add_subcommand("trace", "trace polynomial of a word over {a, b}");
  trace_cmd->add_option("--word", word, "word such as abAB")->required();

  auto* delta_cmd = app.add_subcommand("delta", "irreducibility discriminant Delta_{alpha,beta}");
  delta_cmd->add_option("--alpha", alpha, "first word")->required();
  delta_cmd->add_option("--beta", beta, "second word")->required();

  auto* rec_cmd = app.add_subcommand("reconstruct", "representation matrix from the character");
  rec_cmd->add_option("--word", word, "word to reconstruct")->required();
  rec_cmd->add_option("--char", char_kvs, "specialized character x=.. y=.. z=..")
      ->expected(3);

  auto* coh_cmd = app.add_subcommand("cohomology", "twisted cohomology dimensions");
  coh_cmd->add_option("--file", file, "presentation file (JSON)")->required();

  auto* tor_cmd = app.add_subcommand("torsion", "Reidemeister torsion volume form");
  tor_cmd->add_option("--kind", kind, "handlebody or product-circle")->required();
  tor_cmd->add_option("--file", file, "presentation file (JSON)");
  tor_cmd->add_option("--sign", sign_str, "rho(t) sign: +1 or -1");
  tor_cmd->add_flag("--normalized", normalized, "report tr(xi^2)=2 normalization radicands");

  auto* fib_cmd = app.add_subcommand("fibered", "torsion of a mapping torus");
  fib_cmd->add_option("--file", file, "fibered input file (JSON)")->required();
  fib_cmd->add_option("--point", point_kvs, "rational fixed point x=.. y=.. z=..")
      ->expected(3);

  auto* self_cmd = app.add_subcommand("selfcheck", "randomized identity suites");
  self_cmd->add_option("--seed", seed, "PRNG seed");
  self_cmd->add_option("--words", words_len, "maximum word length");
  self_cmd->add_option("--trials", trials, "override per-suite trial counts");
  self_cmd->add_flag("--tamper", tamper)->group("");  // testing aid

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (trace_cmd->parsed()) {
      run_trace(word);
    } else if (delta_cmd->parsed()) {
      run_delta(alpha, beta);
    } else if (rec_cmd->parsed()) {
      run_reconstruct(word, char_kvs);
    } else if (coh_cmd->parsed()) {
      run_cohomology(file);
    } else if (tor_cmd->parsed()) {
      int sign = 0;
      if (sign_str == "+1" || sign_str == "1") sign = 1;
      else if (sign_str == "-1") sign = -1;
      else throw input_error("sign must be +1 or -1");
      run_torsion(kind, file, sign, normalized);
    } else if (fib_cmd->parsed()) {
      run_fibered(file, point_kvs);
    } else if (self_cmd->parsed()) {
      return run_selfcheck(seed, words_len, trials, tamper);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const degenerate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
