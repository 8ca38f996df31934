#ifndef VKNOT_H
#define VKNOT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VkStatus {
  VK_STATUS_OK = 0,
  VK_STATUS_NULL_POINTER = 1,
  VK_STATUS_INVALID_UTF8 = 2,
  VK_STATUS_GAUSS_CODE = 3,
  VK_STATUS_PARAMETER = 4,
  VK_STATUS_MOVE = 5,
  VK_STATUS_SCRIPT = 6,
  VK_STATUS_INTERNAL = 7,
} VkStatus;

/**
 * Opaque diagram handle.
 */
typedef struct VkDiagram VkDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, empty after a
 * successful call. Owned by the library and valid until the next call.
 */
const char *vk_last_error(void);

/**
 * # Safety
 * `code` must be a nul-terminated string and `out` writable.
 */
enum VkStatus vk_diagram_parse(const char *code, struct VkDiagram **out);

/**
 * Seeded random diagram with `n` chords.
 *
 * # Safety
 * `out` must be writable.
 */
enum VkStatus vk_diagram_random(uintptr_t n, uint64_t seed, struct VkDiagram **out);

/**
 * Normal form G(a): |a| copies of the virtual trefoil with the sign of `a`.
 *
 * # Safety
 * `out` must be writable.
 */
enum VkStatus vk_normal_form(int64_t a, struct VkDiagram **out);

/**
 * # Safety
 * `d` must come from this library and not be freed already. Null is ignored.
 */
void vk_diagram_free(struct VkDiagram *d);

/**
 * # Safety
 * `s` must come from this library. Null is ignored.
 */
void vk_string_free(char *s);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum VkStatus vk_diagram_to_string(const struct VkDiagram *d, char **out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum VkStatus vk_diagram_canonicalize(const struct VkDiagram *d, struct VkDiagram **out);

/**
 * # Safety
 * `d` must be a live handle.
 */
enum VkStatus vk_diagram_chord_count(const struct VkDiagram *d, uintptr_t *out);

/**
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum VkStatus vk_odd_writhe(const struct VkDiagram *d, int64_t *out);

/**
 * J_n for `n != 0`; `n == 0` is a parameter error.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum VkStatus vk_n_writhe(const struct VkDiagram *d, int64_t n, int64_t *out);

/**
 * Invariant report as a JSON object, freed with `vk_string_free`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum VkStatus vk_invariants_json(const struct VkDiagram *d, char **out);

/**
 * Applies one move given in the line format, e.g. `XI 1`.
 *
 * # Safety
 * `d` must be a live handle, `line` nul-terminated and `out` writable.
 */
enum VkStatus vk_apply_move(const struct VkDiagram *d, const char *line, struct VkDiagram **out);

/**
 * Replays a newline-separated move script.
 *
 * # Safety
 * `d` must be a live handle, `script` nul-terminated and `out` writable.
 */
enum VkStatus vk_replay_script(const struct VkDiagram *d,
                               const char *script,
                               struct VkDiagram **out);

/**
 * Class modulo 2k- and Xi-moves: the reduced `a` of the normal form.
 *
 * # Safety
 * `d` must be a live handle and `out_a` writable.
 */
enum VkStatus vk_classify(const struct VkDiagram *d, uint32_t k, int64_t *out_a);

/**
 * Lower bound on 2k-move distance. `-1` means the two diagrams are not
 * related by 2k-moves at all.
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum VkStatus vk_lower_bound(const struct VkDiagram *g,
                             const struct VkDiagram *h,
                             uint32_t k,
                             int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VKNOT_H */
