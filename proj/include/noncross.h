/* noncross - exact enumeration of ordered and unordered partition families
 * and the noncrossing partition transform.
 *
 * C API of the shared library. All counts cross the boundary as exact
 * decimal strings. Strings returned through char** are heap-allocated and
 * must be released with ncx_free. Functions return NCX_OK on success; on
 * failure ncx_last_error() describes the problem for the calling thread.
 */
#ifndef NONCROSS_H
#define NONCROSS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NCX_API __declspec(dllexport)
#else
#define NCX_API __attribute__((visibility("default")))
#endif

typedef enum ncx_status {
  NCX_OK = 0,
  NCX_ERROR_INVALID = 1, /* invalid argument: unknown family, bad flag, ... */
  NCX_ERROR_PARSE = 2,   /* malformed text input */
  NCX_ERROR_BOUND = 3,   /* feasibility bound exceeded */
  NCX_ERROR_CHECK = 4,   /* verification found failing checks */
  NCX_ERROR_INTERNAL = 5
} ncx_status;

NCX_API const char* ncx_status_name(ncx_status s);

/* Message of the last failing call on this thread; valid until the next
 * failing call. Never NULL. */
NCX_API const char* ncx_last_error(void);

NCX_API void ncx_free(char* p);

NCX_API const char* ncx_version(void);

/* Exact cardinality of a partition family over the ground set {1..n}.
 * family: "ss", "sl", "ls", "ll", optionally suffixed "-nc" for the
 * noncrossing restriction (outer letter first; s = set, l = list).
 * method: "auto", "closed", "recurrence" or "bruteforce" (NULL means auto).
 * bound: brute-force feasibility cap; 0 keeps the per-family default.
 * On success *out is the decimal count. */
NCX_API ncx_status ncx_count(const char* family, unsigned n, const char* method,
                             unsigned bound, char** out);

/* Counts for n = 1..upto, one "n value" pair per line. */
NCX_API ncx_status ncx_seq(const char* family, unsigned upto, const char* method,
                           unsigned bound, char** out);

/* Streaming enumeration of family members in the library's canonical text
 * form (blocks separated by '|', entries by ','). */
typedef struct ncx_enum ncx_enum;
NCX_API ncx_status ncx_enum_open(const char* family, unsigned n, ncx_enum** out);
/* Returns 1 and sets *out_item while items remain, 0 at end of stream. */
NCX_API int ncx_enum_next(ncx_enum* e, char** out_item);
NCX_API void ncx_enum_close(ncx_enum* e);

/* The noncrossing partition transform (inverse != 0 applies the inverse).
 * text accepts one integer per line, a single comma- or space-separated
 * line, or "index value" pairs per line. style selects the output form:
 * NULL or "mirror" reproduces the input style, else "comma", "space",
 * "lines" or "pairs". max_terms > 0 restricts the computation to indices
 * 0..max_terms and must not exceed what the input provides. The leading
 * term must be 1. */
NCX_API ncx_status ncx_transform(const char* text, int inverse,
                                 const char* style, unsigned max_terms,
                                 char** out);

/* Peak-labeled Dyck path to a set of lists. path is a string over {U, D};
 * labels is a comma-separated permutation of 1..#peaks. With with_trace != 0
 * the intermediate tables precede the result. */
NCX_API ncx_status ncx_bijection_forward(const char* path, const char* labels,
                                         int with_trace, char** out);

/* Set of lists (partition text) back to the peak-labeled path. The result
 * holds the path string on the first line and the labels on the second. */
NCX_API ncx_status ncx_bijection_inverse(const char* partition, int with_trace,
                                         char** out);

/* Runs a cross-validation suite: "counts", "bijection", "transform",
 * "termcounts" or "all". max_n == 0 keeps each check's default range.
 * *report receives one "PASS ..."/"FAIL ..." line per check. Returns
 * NCX_ERROR_CHECK when at least one check fails (the report is still
 * produced). */
NCX_API ncx_status ncx_verify(const char* suite, unsigned max_n, char** report);

#ifdef __cplusplus
}
#endif

#endif /* NONCROSS_H */
