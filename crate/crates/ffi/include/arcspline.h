#ifndef ARCSPLINE_H
#define ARCSPLINE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ArcsplineStatus {
  ARCSPLINE_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  ARCSPLINE_STATUS_NULL_POINTER = 1,
  /**
   * Malformed argument: bad counts, non-finite values, invalid UTF-8,
   * an inconsistent curve or search configuration.
   */
  ARCSPLINE_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A geometric precondition failed (angle range, zero chord, ...).
   */
  ARCSPLINE_STATUS_DOMAIN = 3,
  /**
   * The JSON text could not be parsed or does not describe a polyarc.
   */
  ARCSPLINE_STATUS_PARSE = 4,
  /**
   * Angle propagation produced a full-circle arc.
   */
  ARCSPLINE_STATUS_FULL_CIRCLE = 5,
  /**
   * The golden-section search hit its iteration limit.
   */
  ARCSPLINE_STATUS_ITERATION_LIMIT = 6,
  /**
   * Internal error; the library caught a panic.
   */
  ARCSPLINE_STATUS_INTERNAL = 7,
} ArcsplineStatus;

typedef enum ArcsplineObjective {
  ARCSPLINE_OBJECTIVE_LENGTH = 0,
  ARCSPLINE_OBJECTIVE_AREA = 1,
  ARCSPLINE_OBJECTIVE_ENERGY = 2,
} ArcsplineObjective;

/**
 * Opaque spline family handle.
 */
typedef struct ArcsplineFamily ArcsplineFamily;

/**
 * Opaque polyarc handle.
 */
typedef struct ArcsplinePolyarc ArcsplinePolyarc;

typedef struct ArcsplineVec2 {
  double x;
  double y;
} ArcsplineVec2;

/**
 * Length, summed absolute segment area and bending energy of a curve.
 */
typedef struct ArcsplineMetrics {
  double length;
  double area;
  double energy;
} ArcsplineMetrics;

/**
 * Fairing search settings; see [`arcspline_search_default`].
 */
typedef struct ArcsplineSearch {
  double lo;
  double up;
  double tol;
  size_t max_iter;
  /**
   * Grid spacing of the global scan, 0 for the plain search.
   */
  double scan_step;
  /**
   * Tolerance of the refinement after the scan, 0 to reuse `tol`.
   */
  double refine_tol;
} ArcsplineSearch;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *arcspline_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *arcspline_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 */
void arcspline_string_free(char *s);

/**
 * Signed radius of the arc with chord length `c_len` and angle `theta`.
 */
enum ArcsplineStatus arcspline_arc_radius(double c_len, double theta, double *out);

/**
 * Length of the arc from its start to parameter `u` in `[0, 1]`.
 */
enum ArcsplineStatus arcspline_arc_length(double c_len, double theta, double u, double *out);

/**
 * Signed area between arc and chord, positive for `theta > 0`.
 */
enum ArcsplineStatus arcspline_arc_segment_area(double c_len, double theta, double *out);

enum ArcsplineStatus arcspline_arc_bending_energy(double c_len,
                                                  double theta,
                                                  double ei,
                                                  double *out);

/**
 * Point at parameter `u`, relative to the arc's start point.
 */
enum ArcsplineStatus arcspline_arc_point_at(struct ArcsplineVec2 chord,
                                            double theta,
                                            double u,
                                            struct ArcsplineVec2 *out);

/**
 * Vector from the arc's center to its start point.
 */
enum ArcsplineStatus arcspline_arc_center_offset(struct ArcsplineVec2 chord,
                                                 double theta,
                                                 struct ArcsplineVec2 *out);

/**
 * Builds a polyarc from `vertex_count` vertices and one angle per segment
 * (`vertex_count - 1` for open curves, `vertex_count` for closed ones).
 */
enum ArcsplineStatus arcspline_polyarc_new(const struct ArcsplineVec2 *vertices,
                                           size_t vertex_count,
                                           const double *thetas,
                                           size_t theta_count,
                                           bool closed,
                                           struct ArcsplinePolyarc **out);

/**
 * Parses a polyarc JSON document (angles in the document's own unit).
 */
enum ArcsplineStatus arcspline_polyarc_from_json(const char *json, struct ArcsplinePolyarc **out);

/**
 * Serializes to JSON; `degrees` selects the angle unit of the document.
 */
enum ArcsplineStatus arcspline_polyarc_to_json(const struct ArcsplinePolyarc *pa,
                                               bool degrees,
                                               char **out);

/**
 * Renders an SVG document with default styling.
 */
enum ArcsplineStatus arcspline_polyarc_to_svg(const struct ArcsplinePolyarc *pa, char **out);

/**
 * Releases a polyarc. Null is ignored.
 */
void arcspline_polyarc_free(struct ArcsplinePolyarc *pa);

enum ArcsplineStatus arcspline_polyarc_segment_count(const struct ArcsplinePolyarc *pa,
                                                     size_t *out);

/**
 * Copies up to `capacity` segment angles into `buffer` and stores the
 * total number of segments in `count`. `buffer` may be null when
 * `capacity` is 0.
 */
enum ArcsplineStatus arcspline_polyarc_thetas(const struct ArcsplinePolyarc *pa,
                                              double *buffer,
                                              size_t capacity,
                                              size_t *count);

enum ArcsplineStatus arcspline_polyarc_metrics(const struct ArcsplinePolyarc *pa,
                                               double ei,
                                               struct ArcsplineMetrics *out);

/**
 * Signed enclosed area: chord polygon plus signed segment areas.
 */
enum ArcsplineStatus arcspline_polyarc_total_area(const struct ArcsplinePolyarc *pa, double *out);

/**
 * Largest tangent mismatch over interior joins.
 */
enum ArcsplineStatus arcspline_polyarc_g1_defect(const struct ArcsplinePolyarc *pa, double *out);

/**
 * Spline family over a polyline.
 */
enum ArcsplineStatus arcspline_family_new(const struct ArcsplineVec2 *vertices,
                                          size_t vertex_count,
                                          bool closed,
                                          struct ArcsplineFamily **out);

/**
 * Releases a family. Null is ignored.
 */
void arcspline_family_free(struct ArcsplineFamily *family);

/**
 * The family member whose first arc angle is `theta0`.
 */
enum ArcsplineStatus arcspline_family_propagate(const struct ArcsplineFamily *family,
                                                double theta0,
                                                struct ArcsplinePolyarc **out);

/**
 * Default search: `[-344°, 344°]`, 0.6° tolerance and scan spacing.
 */
struct ArcsplineSearch arcspline_search_default(void);

/**
 * Minimizes `objective`, one of the [`ArcsplineObjective`] values, over
 * the family. Stores the optimal first angle in `theta0` and the spline in
 * `out`; `metrics` may be null.
 */
enum ArcsplineStatus arcspline_family_smooth(const struct ArcsplineFamily *family,
                                             uint32_t objective,
                                             const struct ArcsplineSearch *search,
                                             double ei,
                                             double *theta0,
                                             struct ArcsplineMetrics *metrics,
                                             struct ArcsplinePolyarc **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ARCSPLINE_H */
