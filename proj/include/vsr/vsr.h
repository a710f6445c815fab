#ifndef VSR_VSR_H
#define VSR_VSR_H

/* C interface to the separator reconfiguration library.
 *
 * Every fallible call returns a vsr_status; on failure the message is
 * available from vsr_last_error() on the calling thread until the next call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with vsr_free_string. Handles are released with their _free
 * function; passing NULL to a _free function is a no-op. */

#include <stddef.h>

#if defined(_WIN32)
#define VSR_API __declspec(dllexport)
#else
#define VSR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vsr_status {
  VSR_OK = 0,
  VSR_ERR_USAGE = 1,
  VSR_ERR_INPUT = 2,
  VSR_ERR_RESOURCE = 3,
  VSR_ERR_CONTRACT = 4,
  VSR_ERR_NOT_SP = 5,
  VSR_ERR_INTERNAL = 6
} vsr_status;

typedef enum vsr_verdict { VSR_NO = 0, VSR_YES = 1, VSR_UNKNOWN = 2 } vsr_verdict;

typedef struct vsr_graph vsr_graph;
typedef struct vsr_instance vsr_instance;
typedef struct vsr_solution vsr_solution;

VSR_API const char* vsr_last_error(void);
VSR_API void vsr_free_string(char* text);
VSR_API const char* vsr_status_name(vsr_status status);

/* Graphs: "n m" header followed by m edge lines. */
VSR_API vsr_status vsr_graph_parse(const char* text, vsr_graph** out);
VSR_API vsr_status vsr_graph_load(const char* path, vsr_graph** out);
VSR_API int vsr_graph_vertex_count(const vsr_graph* graph);
VSR_API size_t vsr_graph_edge_count(const vsr_graph* graph);
VSR_API void vsr_graph_free(vsr_graph* graph);

/* Instances: keyword format; relative graph paths resolve against base_dir
 * (may be NULL for the working directory). */
VSR_API vsr_status vsr_instance_parse(const char* text, const char* base_dir, vsr_instance** out);
VSR_API vsr_status vsr_instance_load(const char* path, vsr_instance** out);
VSR_API vsr_status vsr_instance_format(const vsr_instance* instance, char** out);
VSR_API const char* vsr_instance_rule(const vsr_instance* instance);
VSR_API void vsr_instance_free(vsr_instance* instance);

typedef struct vsr_solve_options {
  /* "auto", "oracle", "tame", "3p1d" or "sp"; NULL means "auto". */
  const char* engine;
  size_t state_cap;
  size_t family_cap;
} vsr_solve_options;

VSR_API void vsr_solve_options_init(vsr_solve_options* options);

/* A resource cap hit is not an error: the solution carries VSR_UNKNOWN. */
VSR_API vsr_status vsr_solve(const vsr_instance* instance, const vsr_solve_options* options, vsr_solution** out);
VSR_API vsr_verdict vsr_solution_verdict(const vsr_solution* solution);
VSR_API const char* vsr_solution_engine(const vsr_solution* solution);
/* Number of states in the certificate; 0 unless the verdict is YES. */
VSR_API size_t vsr_solution_length(const vsr_solution* solution);
VSR_API const int* vsr_solution_state(const vsr_solution* solution, size_t index, size_t* size);
/* Verdict line, followed by one state per line when with_sequence is set. */
VSR_API vsr_status vsr_solution_format(const vsr_solution* solution, int with_sequence, char** out);
VSR_API void vsr_solution_free(vsr_solution* solution);

/* Sets *ok; on rejection *reason (if non-NULL) receives "reason at index i". */
VSR_API vsr_status vsr_verify_sequence_text(const vsr_instance* instance, const char* sequence_text, int* ok,
                                            char** reason);

/* One minimal st-separator per line, ascending. */
VSR_API vsr_status vsr_enumerate_separators_text(const vsr_graph* graph, int s, int t, size_t family_cap,
                                                 char** out);

VSR_API vsr_status vsr_export_dot(const vsr_instance* instance, size_t state_cap, char** out);

/* TJ -> TAR(k+1), or TAR(k) -> the equivalent TJ instance. */
VSR_API vsr_status vsr_convert_instance(const vsr_instance* instance, char** out);
/* Converts a certificate of `instance` into one for the converted instance. */
VSR_API vsr_status vsr_convert_sequence(const vsr_instance* instance, const char* sequence_text, char** out);

/* ISR text -> VSR instance text, and back (the instance must be peanut-like
 * with its terminals as foci). */
VSR_API vsr_status vsr_reduce_isr_text(const char* isr_text, const char* base_dir, char** out);
VSR_API vsr_status vsr_reduce_vsr(const vsr_instance* instance, char** out);

/* cls: "3p1-diamond", "peanut" or "sp". First line is "yes" or "no". */
VSR_API vsr_status vsr_recognize(const vsr_graph* graph, const char* cls, char** out);
/* One line per block: bridges as "bridge a-b", other blocks as PS-tree terms. */
VSR_API vsr_status vsr_decompose(const vsr_graph* graph, char** out);

#ifdef __cplusplus
}
#endif

#endif
