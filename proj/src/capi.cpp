#include "abnet/abnet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "abnet/report.hpp"

struct abnet_network {
  abnet::NetworkDocument doc;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs `body`, translating exceptions into status codes and the thread's last error.
template <typename F>
abnet_status guarded(F&& body) {
  last_error.clear();
  try {
    return static_cast<abnet_status>(body());
  } catch (const abnet::Error& e) {
    last_error = std::string(abnet::to_string(e.kind())) + ": " + e.what();
    return static_cast<abnet_status>(abnet::exit_status(e.kind()));
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return ABNET_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal: unknown exception";
    return ABNET_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

void abnet_options_init(abnet_options* options) {
  if (!options) return;
  *options = abnet_options{};
  options->steps = 10'000;
  options->structured = 1;
}

abnet_status abnet_network_parse(const char* text, size_t length, abnet_network** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    if (!text || !out) abnet::fail(abnet::ErrorKind::invalid_argument, "null argument");
    auto* net = new abnet_network{abnet::parse_document(std::string(text, length))};
    *out = net;
    return ABNET_OK;
  });
}

void abnet_network_free(abnet_network* network) { delete network; }

size_t abnet_network_vertex_count(const abnet_network* network) {
  return network ? network->doc.network.vertex_count() : 0;
}

size_t abnet_network_letter_count(const abnet_network* network) {
  return network ? network->doc.network.letter_count() : 0;
}

abnet_status abnet_network_serialize(const abnet_network* network, char** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    if (!network || !out) abnet::fail(abnet::ErrorKind::invalid_argument, "null argument");
    *out = copy_string(abnet::serialize(network->doc));
    return ABNET_OK;
  });
}

abnet_status abnet_run(const abnet_network* network, const char* command, const abnet_options* options,
                       char** report) {
  if (report) *report = nullptr;
  return guarded([&] {
    if (!network || !command || !report) abnet::fail(abnet::ErrorKind::invalid_argument, "null argument");
    abnet_options defaults;
    abnet_options_init(&defaults);
    const abnet_options& o = options ? *options : defaults;
    abnet::CommandOptions opt;
    if (o.has_budget) opt.budget = o.budget;
    opt.seed = o.seed;
    opt.steps = o.steps;
    opt.refine_cycles = o.refine_cycles != 0;
    if (o.pending) opt.pending = o.pending;
    if (o.state) opt.state = o.state;
    if (o.alpha) opt.alpha = o.alpha;
    const abnet::Report r = abnet::run_command(command, network->doc, opt);
    *report = copy_string(abnet::render(r.body, o.structured != 0));
    if (r.status == ABNET_ERR_NON_HALTING) last_error = "non-halting: halting certificate is negative";
    if (r.status == ABNET_ERR_BUDGET) last_error = "budget-exhausted: stabilization did not finish within the budget";
    if (r.status == ABNET_ERR_INTERNAL) last_error = "invariant-breach: an oracle cross-check failed";
    return r.status;
  });
}

void abnet_string_free(char* s) { std::free(s); }

const char* abnet_last_error(void) { return last_error.c_str(); }

const char* abnet_version(void) { return "1.0.0"; }

}  // extern "C"
