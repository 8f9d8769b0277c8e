// Command-line front end. Links only the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "abnet/abnet.h"

namespace {

struct Flags {
  std::string input;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 10'000;
  bool refine_cycles = false;
  std::string format = "text";
  std::string pending;
  std::string state;
  std::string alpha;
};

bool read_input(const std::string& path, std::string& text) {
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite abelian networks: simulation, algebraic invariants and the burning test."};
  app.set_version_flag("--version", std::string(abnet_version()));
  app.require_subcommand(1, 1);

  Flags flags;
  const char* commands[][2] = {
      {"analyze", "Kernel, production matrix, Laplacian, halting certificate and group invariants"},
      {"simulate", "Stabilize pending letters from a joint state"},
      {"recurrent", "Burning test for one joint state"},
      {"burning", "Minimal burning script, odometer and element"},
      {"oracle", "Brute-force global monoid with formula cross-checks"},
      {"markov", "Random letter chain on joint states"},
      {"sandpilize", "Emit the sandpilization as a network document"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", flags.input, "Network document (default: standard input)");
    sub->add_option("--budget", flags.budget, "Round budget (kernel box size for analyze)");
    sub->add_option("--seed", flags.seed, "Random seed for markov");
    sub->add_option("--steps", flags.steps, "Chain length for markov");
    sub->add_flag("--refine-cycles", flags.refine_cycles, "Burning lower bound on cycle letters only");
    sub->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--pending", flags.pending, "Pending letters, e.g. a=2,b=1");
    sub->add_option("--state", flags.state, "Joint state, e.g. u=1,v=0 (unlisted vertices: first state)");
    sub->add_option("--alpha", flags.alpha, "Letter distribution, e.g. a=0.5,b=0.5 (default uniform)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ABNET_ERR_VALIDATION;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const bool has_budget = app.get_subcommands().front()->count("--budget") > 0;

  std::string text;
  if (!read_input(flags.input, text)) {
    std::cerr << "abnet: cannot read " << flags.input << "\n";
    return ABNET_ERR_VALIDATION;
  }
  abnet_network* net = nullptr;
  if (abnet_network_parse(text.data(), text.size(), &net) != ABNET_OK) {
    std::cerr << "abnet: " << abnet_last_error() << "\n";
    return ABNET_ERR_VALIDATION;
  }

  abnet_options opt;
  abnet_options_init(&opt);
  opt.has_budget = has_budget ? 1 : 0;
  opt.budget = flags.budget;
  opt.seed = flags.seed;
  opt.steps = flags.steps;
  opt.refine_cycles = flags.refine_cycles ? 1 : 0;
  opt.structured = flags.format == "structured" ? 1 : 0;
  opt.pending = flags.pending.c_str();
  opt.state = flags.state.c_str();
  opt.alpha = flags.alpha.c_str();

  char* report = nullptr;
  const abnet_status status = abnet_run(net, command.c_str(), &opt, &report);
  if (report) std::fputs(report, stdout);
  if (status != ABNET_OK) std::cerr << "abnet: " << abnet_last_error() << "\n";
  abnet_string_free(report);
  abnet_network_free(net);
  return status;
}
