#ifndef MONOCHROME_H
#define MONOCHROME_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MonoStatus {
  MONO_STATUS_OK = 0,
  MONO_STATUS_NULL_POINTER = 1,
  MONO_STATUS_INVALID_UTF8 = 2,
  MONO_STATUS_PARSE_ERROR = 3,
  MONO_STATUS_INVALID_GRAPH = 4,
  MONO_STATUS_TOO_LARGE = 5,
  MONO_STATUS_UNSAT = 6,
  MONO_STATUS_HEURISTIC_FAILURE = 7,
  MONO_STATUS_INVALID_CERTIFICATE = 8,
  MONO_STATUS_INVALID_ARGUMENT = 9,
  MONO_STATUS_INTERNAL = 10,
  MONO_STATUS_PANIC = 11,
} MonoStatus;

// Opaque cycle partition certificate.
typedef struct MonoCertificate MonoCertificate;

// Opaque coloured (multi-)graph.
typedef struct MonoGraph MonoGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread; valid until the next call.
const char *mono_last_error(void);

void mono_string_free(char *s);

// Parses graph JSON (`{"n": .., "edges": [[u, v, colour], ..]}`).
enum MonoStatus mono_graph_from_json(const char *json, struct MonoGraph **out);

char *mono_graph_to_json(const struct MonoGraph *g);

void mono_graph_free(struct MonoGraph *g);

// Vertex count, or 0 for a null handle.
uintptr_t mono_graph_vertex_count(const struct MonoGraph *g);

uintptr_t mono_graph_min_degree(const struct MonoGraph *g);

// The sharpness construction; `inner` is 0 (red) or 1 (blue).
enum MonoStatus mono_gen_sharpness(uintptr_t m, uint8_t inner, struct MonoGraph **out);

enum MonoStatus mono_gen_three_colour(uintptr_t m, struct MonoGraph **out);

// Random graph with minimum degree ⌈delta·n⌉; `delta` is a decimal or a
// fraction such as "3/4".
enum MonoStatus mono_gen_random(uintptr_t n,
                                const char *delta,
                                double red_bias,
                                uint64_t seed,
                                struct MonoGraph **out);

// Exact minimum partition with at most `k_max` parts. Returns
// `MONO_STATUS_UNSAT` when none exists; `*out` is then left untouched.
enum MonoStatus mono_solve_exact(const struct MonoGraph *g,
                                 uintptr_t k_max,
                                 struct MonoCertificate **out,
                                 uintptr_t *k_star);

// Heuristic partition into at most three cycles.
enum MonoStatus mono_solve_heuristic(const struct MonoGraph *g,
                                     const char *gamma,
                                     struct MonoCertificate **out);

enum MonoStatus mono_certificate_from_json(const char *json, struct MonoCertificate **out);

char *mono_certificate_to_json(const struct MonoCertificate *c);

// Number of non-empty parts, or 0 for a null handle.
uintptr_t mono_certificate_part_count(const struct MonoCertificate *c);

void mono_certificate_free(struct MonoCertificate *c);

// `MONO_STATUS_OK` when the certificate partitions the graph into
// monochromatic cycles, `MONO_STATUS_INVALID_CERTIFICATE` otherwise.
enum MonoStatus mono_verify(const struct MonoGraph *g, const struct MonoCertificate *c);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MONOCHROME_H */
