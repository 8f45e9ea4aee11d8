/* C interface for exact bicomplex third-order Jacobsthal arithmetic. */

#ifndef BCJ3_H
#define BCJ3_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every ABI call.
 */
typedef enum Bcj3Status {
  /**
   * The call succeeded and out-parameters are set.
   */
  Ok = 0,
  /**
   * A required pointer argument was null.
   */
  NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  InvalidUtf8 = 2,
  /**
   * The requested identity name is not registered.
   */
  UnknownName = 3,
  /**
   * Exact arithmetic refused an inversion or pivot.
   */
  NotInvertible = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  Panic = 5,
} Bcj3Status;

/**
 * Opaque streaming handle over consecutive sequence terms.
 */
typedef struct Bcj3Cursor Bcj3Cursor;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Writes the n-th bicomplex term as JSON into out_json.
 *
 * # Safety
 * out_json must be a valid pointer to writable storage for one pointer.
 */
enum Bcj3Status bcj3_term(uint64_t n, char **out_json);

/**
 * Writes the n-th term computed through the banded determinant; the
 * value agrees with bcj3_term by construction, so this doubles as an
 * end-to-end arithmetic self-check.
 *
 * # Safety
 * out_json must be a valid pointer to writable storage for one pointer.
 */
enum Bcj3Status bcj3_det_term(uint64_t n, char **out_json);

/**
 * Runs one registered identity check with default ranges and writes its
 * report as JSON.
 *
 * # Safety
 * name must be a valid NUL-terminated string; out_json must be a valid
 * pointer to writable storage for one pointer.
 */
enum Bcj3Status bcj3_verify(const char *name, char **out_json);

/**
 * Creates a streaming cursor positioned at term 0.
 */
struct Bcj3Cursor *bcj3_cursor_new(void);

/**
 * Advances the cursor and writes the next term as JSON.
 *
 * # Safety
 * cursor must come from bcj3_cursor_new and not have been freed;
 * out_json must be a valid pointer to writable storage for one pointer.
 */
enum Bcj3Status bcj3_cursor_next(struct Bcj3Cursor *cursor, char **out_json);

/**
 * Releases a cursor; a null pointer is ignored.
 *
 * # Safety
 * cursor must come from bcj3_cursor_new and must not be used afterward.
 */
void bcj3_cursor_free(struct Bcj3Cursor *cursor);

/**
 * Releases a string produced by this library; a null pointer is ignored.
 *
 * # Safety
 * text must come from this library and must not be used afterward.
 */
void bcj3_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BCJ3_H */
