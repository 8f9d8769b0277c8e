#ifndef ABNET_ABNET_H
#define ABNET_ABNET_H

/* C interface to the abelian network library. Networks are opaque handles
   built from JSON documents; commands return reports as heap strings that
   the caller releases with abnet_string_free. Status codes double as the
   command-line exit codes. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ABNET_API __declspec(dllexport)
#else
#define ABNET_API __attribute__((visibility("default")))
#endif

typedef enum abnet_status {
  ABNET_OK = 0,
  ABNET_ERR_INTERNAL = 1,
  ABNET_ERR_VALIDATION = 2,
  ABNET_ERR_NON_HALTING = 3,
  ABNET_ERR_BUDGET = 4
} abnet_status;

typedef struct abnet_network abnet_network;

typedef struct abnet_options {
  int has_budget;          /* nonzero: use budget below */
  uint64_t budget;         /* rounds (simulate, recurrent) or kernel box size (analyze) */
  uint64_t seed;           /* markov */
  uint64_t steps;          /* markov */
  int refine_cycles;       /* recurrent, burning */
  int structured;          /* nonzero: JSON report, zero: text report */
  const char* pending;     /* "a=2,b=1" or NULL */
  const char* state;       /* "u=1,v=0" or NULL */
  const char* alpha;       /* "a=0.5,b=0.5" or NULL for uniform */
} abnet_options;

/* Defaults: no budget, seed 0, 10000 steps, structured output. */
ABNET_API void abnet_options_init(abnet_options* options);

/* Parses a JSON network document of `length` bytes. On failure *out is NULL
   and abnet_last_error describes the problem. */
ABNET_API abnet_status abnet_network_parse(const char* text, size_t length, abnet_network** out);
ABNET_API void abnet_network_free(abnet_network* network);

ABNET_API size_t abnet_network_vertex_count(const abnet_network* network);
ABNET_API size_t abnet_network_letter_count(const abnet_network* network);

/* Canonical JSON form of the network. */
ABNET_API abnet_status abnet_network_serialize(const abnet_network* network, char** out);

/* Runs analyze | simulate | recurrent | burning | oracle | markov | sandpilize.
   *report is set whenever the command produced a report, which can happen
   together with a nonzero status (non-halting analysis, exhausted budget). */
ABNET_API abnet_status abnet_run(const abnet_network* network, const char* command, const abnet_options* options,
                                 char** report);

ABNET_API void abnet_string_free(char* s);

/* Message for the last failure on the calling thread ("" if none). */
ABNET_API const char* abnet_last_error(void);

ABNET_API const char* abnet_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ABNET_ABNET_H */
