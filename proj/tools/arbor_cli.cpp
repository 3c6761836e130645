// Command line front end for the arbor library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arbor/invariants.hpp"
#include "arbor/oracle.hpp"

namespace {

using namespace arbor;

struct Flags {
  std::string code_path;
  bool machine = false;
  std::uint64_t seed = 1;
  int jobs = 1;
  int radius = 10;
  int trials = 200;
};

std::optional<Code> load_code(const Flags& f) {
  if (f.code_path.empty()) return std::nullopt;
  return Code::load(f.code_path);
}

/// Colors on the command line are either bare integers or alphabet names
/// from the code file.
Color parse_color(const std::string& tok, const std::optional<Code>& code) {
  if (code) {
    if (auto c = code->color_of(tok)) return *c;
  }
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::ColorNotInCode, "unknown color '" + tok + "'");
}

ColorWord parse_colors(const std::string& csv, const std::optional<Code>& code) {
  ColorWord w;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw Error(Errc::EmptyWord, "empty letter in '" + csv + "'");
    w.push_back(parse_color(tok, code));
  }
  if (w.empty()) throw Error(Errc::EmptyWord, "empty color word");
  return w;
}

/// `<block>: <csv>` lines; `#` comments.
std::map<Color, ColorWord> parse_blocks_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadCodeFile, "cannot open blocks file " + path);
  std::map<Color, ColorWord> blocks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::BadCodeFile, "expected '<block>: <word>' in: " + line);
    Color b = std::stoi(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    auto a = rest.find_first_not_of(" \t");
    auto z = rest.find_last_not_of(" \t\r");
    if (a == std::string::npos)
      blocks[b] = {};
    else
      blocks[b] = parse_word(rest.substr(a, z - a + 1));
  }
  return blocks;
}

void emit_report(const CodeReport& r, bool machine) {
  if (!machine) {
    std::cout << r.to_text();
    return;
  }
  std::cout << "verdict=" << CodeReport::verdict_name(r.verdict) << "\n";
  if (r.verdict == CodeReport::Verdict::AlmostBiregular)
    std::cout << "n=" << r.n << "\nm=" << r.m << "\nk=" << r.k
              << "\nconstant=" << bounded_constant_from_K(2) << "\n";
  if (r.witness) {
    std::cout << "z=" << r.witness->z_color << "\nblock0=" << word_str(r.witness->spur_path0)
              << "\nblock1=" << word_str(r.witness->axis_path1) << "\nblock2="
              << (r.witness->axis_path2.empty() ? "-" : word_str(r.witness->axis_path2))
              << "\np=" << r.witness->p << "\nq=" << r.witness->q << "\n";
  }
  if (!r.reason.empty()) std::cout << "reason=" << r.reason << "\n";
}

void emit_cert(const LowerBoundCertificate& c, bool machine) {
  if (machine) {
    std::cout << "type=" << c.type.str() << "\ncolor=" << c.color << "\nN=" << c.occurrences
              << "\nLinf=" << c.l_inf << "\nbound=" << c.bound << "\n";
  } else {
    std::cout << "type: " << c.type.str() << "\ncolor: " << c.color
              << "\nN: " << c.occurrences << "\nLinf: " << c.l_inf
              << "\nbound: " << c.bound << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"calculus of translation types on colored trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--code", f.code_path, "code file (colors: header plus degree triples)");
  app.add_flag("--machine", f.machine, "line-oriented key=value output");
  app.add_option("--seed", f.seed, "random seed");
  app.add_option("--jobs", f.jobs, "parallel trial workers");

  auto* analyze = app.add_subcommand("analyze-code", "classify a code file");

  auto* compose = app.add_subcommand("compose", "apply a composition rule");
  compose->require_subcommand(1);
  compose->fallthrough();
  std::string path_csv, spur_csv, type_csv, anchor_tok;
  auto* rr = compose->add_subcommand("rot-rot", "two rotations joined by a path");
  rr->add_option("--path", path_csv)->required();
  auto* rt = compose->add_subcommand("rot-trans", "rotation off the axis of a translation");
  rt->add_option("--spur", spur_csv)->required();
  rt->add_option("--type", type_csv)->required();
  rt->add_option("--anchor", anchor_tok)->required();
  auto* oa = compose->add_subcommand("on-axis", "rotation fixing an axis vertex");
  oa->add_option("--type", type_csv)->required();
  oa->add_option("--anchor", anchor_tok)->required();

  auto* lb = app.add_subcommand("lower-bound", "rotation-count lower bound certificate");
  std::string lb_type;
  lb->add_option("--type", lb_type)->required();

  auto* gt = app.add_subcommand("gen-tn", "generate the witness family t_n");
  int gt_n = 2;
  std::string blocks_path;
  gt->add_option("--n", gt_n)->required();
  gt->add_option("--blocks", blocks_path, "substitute block images from file");

  auto* wit = app.add_subcommand("witness", "unboundedness certificates for a code");
  int up_to = 10;
  wit->add_option("--up-to", up_to);

  auto* sim = app.add_subcommand("simulate", "ball experiments");
  sim->require_subcommand(1);
  sim->fallthrough();
  auto* simcr = sim->add_subcommand("compose-rots", "random products of two rotations");
  simcr->add_option("--radius", f.radius);
  simcr->add_option("--trials", f.trials);

  auto* cc = app.add_subcommand("crosscheck", "ball engine vs. symbolic calculus");
  std::string scenario;
  cc->add_option("--scenario", scenario, "rot-rot | off-axis | on-axis | lemma39")->required();
  cc->add_option("--radius", f.radius);
  cc->add_option("--trials", f.trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<Code> code = load_code(f);

    if (*analyze) {
      if (!code) throw Error(Errc::BadCodeFile, "analyze-code requires --code");
      CodeReport r = arbor::classify(*code);
      emit_report(r, f.machine);
      return 0;
    }

    if (*compose) {
      if (*rr) {
        std::cout << compose_rot_rot(parse_colors(path_csv, code)).str() << "\n";
      } else if (*rt) {
        auto types = compose_rot_trans_offaxis(parse_colors(spur_csv, code),
                                               make_type(parse_colors(type_csv, code)),
                                               parse_color(anchor_tok, code));
        for (const auto& t : types) std::cout << t.str() << "\n";
      } else {
        auto outs = onaxis_outcomes(make_type(parse_colors(type_csv, code)),
                                    parse_color(anchor_tok, code));
        for (const auto& o : outs) std::cout << o.str() << "\n";
      }
      return 0;
    }

    if (*lb) {
      emit_cert(rotation_lower_bound(make_type(parse_colors(lb_type, code))), f.machine);
      return 0;
    }

    if (*gt) {
      ColorWord t = gen_tn(gt_n);
      if (blocks_path.empty()) {
        std::cout << word_str(t) << "\n";
      } else {
        std::cout << substitute_blocks(make_type(t), parse_blocks_file(blocks_path)).str()
                  << "\n";
      }
      return 0;
    }

    if (*wit) {
      if (!code) throw Error(Errc::BadCodeFile, "witness requires --code");
      auto cfg = find_forbidden_config(*code);
      if (!cfg) {
        std::cerr << "no forbidden configuration found: the code is not a witness\n";
        return 1;
      }
      int n = 2;  // certificates are emitted for n = 2..up_to in order
      for (const auto& c : unboundedness_certificates(*cfg, up_to))
        std::cout << "n=" << n++ << " N=" << c.occurrences << " Linf=" << c.l_inf
                  << " bound=" << c.bound << "\n";
      return 0;
    }

    if (*sim) {
      if (!code) throw Error(Errc::BadCodeFile, "simulate requires --code");
      Ball ball(*code, code->ramification_colors().empty()
                           ? 0
                           : code->ramification_colors().front(),
                f.radius);
      std::vector<int> cands;
      for (int v = 0; v < ball.size(); ++v)
        if (ball.depth(v) <= std::max(2, f.radius / 3) &&
            code->total_degree(ball.color(v)) >= 3)
          cands.push_back(v);
      for (int t = 0; t < f.trials; ++t) {
        std::mt19937_64 rng(trial_seed(f.seed, t));
        int u = cands[rng() % cands.size()];
        int v = cands[rng() % cands.size()];
        auto g = arbor::compose(random_rotation(ball, u, rng()),
                                random_rotation(ball, v, rng()));
        try {
          AutClass cls = arbor::classify(g);
          switch (cls.kind) {
            case AutClass::Kind::Rotation:
              std::cout << "class=rotation length=0 type=-\n";
              break;
            case AutClass::Kind::Symmetry:
              std::cout << "class=symmetry length=1 type=-\n";
              break;
            case AutClass::Kind::Translation:
              std::cout << "class=translation length=" << cls.length
                        << " type=" << empirical_type(g).str() << "\n";
              break;
          }
        } catch (const Error& e) {
          if (e.code() != Errc::InsufficientRadius) throw;
          std::cout << "class=unknown length=- type=-\n";
        }
      }
      return 0;
    }

    if (*cc) {
      CrosscheckOptions opts;
      opts.radius = f.radius;
      opts.trials = f.trials;
      opts.seed = f.seed;
      opts.jobs = f.jobs;
      CrosscheckSummary s;
      if (scenario == "lemma39") {
        s = crosscheck_lemma39();
      } else {
        if (!code) throw Error(Errc::BadCodeFile, "crosscheck scenario requires --code");
        if (scenario == "rot-rot")
          s = crosscheck_rot_rot(*code, opts);
        else if (scenario == "off-axis")
          s = crosscheck_offaxis(*code, opts);
        else if (scenario == "on-axis")
          s = crosscheck_onaxis(*code, opts);
        else
          throw Error(Errc::OutOfRange, "unknown scenario '" + scenario + "'");
      }
      std::cout << s.line() << "\n";
      for (const auto& n : s.mismatch_notes) std::cerr << "mismatch: " << n << "\n";
      return s.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::BadCodeFile:
      case Errc::EmptyWord:
      case Errc::ColorNotInCode:
      case Errc::OutOfRange:
        return 2;  // malformed input or flags
      default:
        return 1;  // mathematical verdict failure
    }
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
