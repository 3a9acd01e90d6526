#ifndef LABYRINTH_H
#define LABYRINTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define LAB_TAIL_FINITE 0

#define LAB_TAIL_REPEAT_LAST 1

#define LAB_TAIL_CYCLE 2

typedef enum LabStatus {
  LAB_STATUS_OK = 0,
  LAB_STATUS_NULL_POINTER = 1,
  LAB_STATUS_PARSE = 2,
  LAB_STATUS_IO = 3,
  LAB_STATUS_INVALID = 4,
  LAB_STATUS_NOT_LABYRINTH = 5,
  LAB_STATUS_BUDGET = 6,
  LAB_STATUS_OVERFLOW = 7,
  LAB_STATUS_PANIC = 8,
} LabStatus;

typedef struct LabPattern LabPattern;

typedef struct LabSequence LabSequence;

typedef struct LabValidation {
  bool property1;
  bool property2;
  bool property3;
  bool wild_property1;
  bool wild_property2;
  bool is_labyrinth;
  bool is_wild_labyrinth;
  bool horizontally_blocked;
  bool vertically_blocked;
  size_t vertical_pairs;
  size_t horizontal_pairs;
} LabValidation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *lab_last_error(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void lab_string_free(char *s);

/**
 * Parses pattern text.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum LabStatus lab_pattern_parse(const char *text, struct LabPattern **out);

/**
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum LabStatus lab_pattern_load(const char *path, struct LabPattern **out);

/**
 * # Safety
 * `p` must come from this library, or be null.
 */
void lab_pattern_free(struct LabPattern *p);

/**
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_pattern_size(const struct LabPattern *p, size_t *m, size_t *s);

/**
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_pattern_validate(const struct LabPattern *p, struct LabValidation *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_pattern_complement(const struct LabPattern *p, struct LabPattern **out);

/**
 * Pattern text in the file format.
 *
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_pattern_to_text(const struct LabPattern *p, char **out);

/**
 * The path matrix, row-major with rows and columns `A..F`.
 *
 * # Safety
 * `out` must point to 36 writable `uint64_t`.
 */
enum LabStatus lab_pattern_path_matrix(const struct LabPattern *p, uint64_t *out);

/**
 * SVG rendering with default colors.
 *
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_pattern_render_svg(const struct LabPattern *p, uint32_t cell_pixels, char **out);

/**
 * An empty sequence with one of the `LAB_TAIL_*` tails.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LabStatus lab_sequence_new(uint32_t tail, struct LabSequence **out);

/**
 * Appends a copy of `p`.
 *
 * # Safety
 * Both handles must be valid.
 */
enum LabStatus lab_sequence_push(struct LabSequence *seq, const struct LabPattern *p);

/**
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum LabStatus lab_sequence_load(const char *path, struct LabSequence **out);

/**
 * # Safety
 * `seq` must come from this library, or be null.
 */
void lab_sequence_free(struct LabSequence *seq);

/**
 * The level set `W_n` as a pattern. A zero budget selects the default.
 *
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_sequence_build_level(const struct LabSequence *seq,
                                        size_t n,
                                        uint64_t budget_cells,
                                        struct LabPattern **out);

/**
 * `M(n)` as six lines of decimals.
 *
 * # Safety
 * All pointers must be valid.
 */
enum LabStatus lab_sequence_matrix_text(const struct LabSequence *seq, size_t n, char **out);

/**
 * Path lengths `A(n)..F(n)`; `LAB_STATUS_OVERFLOW` if one exceeds 64 bits.
 *
 * # Safety
 * `out` must point to 6 writable `uint64_t`.
 */
enum LabStatus lab_sequence_lengths(const struct LabSequence *seq, size_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LABYRINTH_H */
