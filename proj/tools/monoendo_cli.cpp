#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "monoendo/report.hpp"

namespace {

using monoendo::RunOptions;

struct Args {
  std::string config;
  std::optional<std::int64_t> q;
  std::optional<std::string> word;
  std::optional<int> depth;
  std::optional<std::size_t> cell;
  std::string out;
  bool verbose = false;
};

int emit_error(const char* kind, const std::string& message, int line = 0) {
  nlohmann::ordered_json e;
  e["kind"] = kind;
  e["message"] = message;
  if (line > 0) e["line"] = line;
  nlohmann::ordered_json j;
  j["error"] = e;
  std::cerr << message << "\n" << j.dump() << "\n";
  return std::string(kind) == "input" ? 2 : 1;
}

int run(const std::string& command, const Args& a) {
  try {
    if (a.verbose) std::cerr << "monoendo: reading " << a.config << "\n";
    const monoendo::Config cfg = monoendo::load_config(a.config);
    RunOptions opts;
    opts.q = a.q;
    opts.depth = a.depth;
    opts.cell = a.cell;
    if (a.word) opts.word = monoendo::parse_word(*a.word);
    if (a.verbose) std::cerr << "monoendo: " << command << " on " << cfg.datum->type_label() << " chi = " << cfg.chi.to_string() << "\n";
    const std::string text = monoendo::render(monoendo::run_command(command, cfg, opts));
    if (a.verbose) std::cerr << "monoendo: done\n";
    if (a.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(a.out, std::ios::binary);
      if (!out) return emit_error("input", "cannot write " + a.out);
      out << text;
    }
    return 0;
  } catch (const monoendo::ConfigError& e) {
    return emit_error("input", e.what(), e.line());
  } catch (const monoendo::InputError& e) {
    return emit_error("input", e.what());
  } catch (const monoendo::SizeError& e) {
    return emit_error("size", e.what());
  } catch (const monoendo::RefusalError& e) {
    return emit_error("refusal", e.what());
  } catch (const monoendo::InternalError& e) {
    return emit_error("internal", e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromic Hecke algebras, blocks, cells and Frobenius counts for root data"};
  app.set_version_flag("--version", std::string(MONOENDO_VERSION));
  app.require_subcommand(1);

  Args a;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"analyze", "endoscopic datum, Omega_L and block tables"},
      {"kl", "canonical basis of the monodromic Hecke algebra at chi"},
      {"cells", "two-sided cells of W°_L and extended cells"},
      {"cocycle", "Tits cocycle c, lambda and a trivializing cochain (needs --q)"},
      {"count", "Frobenius orbit report and the torus-case representation count"},
      {"bsl", "Bott-Samelson rewrite and character of a word (needs --word)"},
  };
  std::string chosen;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", a.config, "config file (JSON)")->required();
    sub->add_option("--out", a.out, "write the report here instead of stdout");
    sub->add_flag("--verbose,-v", a.verbose, "progress on stderr");
    const std::string name = s.name;
    if (name == "analyze" || name == "cocycle" || name == "count") sub->add_option("--q", a.q, "prime power q");
    if (name == "kl") sub->add_option("--depth", a.depth, "largest length of w to tabulate");
    if (name == "count") sub->add_option("--cell", a.cell, "report b_set at this cell of W°_L without counting");
    if (name == "bsl") sub->add_option("--word", a.word, "simple indices, e.g. s1,s2,s1")->required();
    sub->callback([&chosen, name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return emit_error("input", e.what());
  }
  return run(chosen, a);
}
