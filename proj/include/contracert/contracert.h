//------------------------------------------------------------------------------
//
//   Copyright 2026 The contracert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#ifndef CONTRACERT_CONTRACERT_H
#define CONTRACERT_CONTRACERT_H

/* C interface to the contracert library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cc_status; on CC_ERR_* the message is available
 * from cc_last_error() on the same thread until the next call. Reports are
 * returned as JSON strings owned by the caller and released with cc_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CONTRACERT_BUILDING_LIBRARY)
#define CONTRACERT_API __declspec(dllexport)
#else
#define CONTRACERT_API __declspec(dllimport)
#endif
#else
#define CONTRACERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status
{
  CC_OK           = 0, /* completed; for checks: the condition holds */
  CC_FAILED       = 1, /* the condition fails or a counterexample was found */
  CC_ERR_INPUT    = 2, /* malformed input, bad parameter or unknown name */
  CC_ERR_INTERNAL = 3
} cc_status;

typedef struct cc_space cc_space;
typedef struct cc_map   cc_map;
typedef struct cc_alpha cc_alpha;
typedef struct cc_phi   cc_phi;

CONTRACERT_API char const *cc_version(void);
CONTRACERT_API char const *cc_last_error(void);
CONTRACERT_API void        cc_string_free(char *s);

/* -- spaces ----------------------------------------------------------------- */

CONTRACERT_API cc_status cc_space_from_json(char const *json, double tol, cc_space **out);
/* `data` is a row-major n x n matrix. */
CONTRACERT_API cc_status cc_space_from_matrix(double const *data, size_t n, double tol, cc_space **out);
CONTRACERT_API cc_status cc_space_bounded(cc_space const *space, double delta, cc_space **out);
CONTRACERT_API cc_status cc_space_scaled(cc_space const *space, double c, cc_space **out);
CONTRACERT_API size_t    cc_space_size(cc_space const *space);
CONTRACERT_API double    cc_space_distance(cc_space const *space, size_t i, size_t j);
CONTRACERT_API cc_status cc_space_to_json(cc_space const *space, char **out);
CONTRACERT_API void      cc_space_free(cc_space *space);

/* Validates the matrix of a space document without requiring it to be a metric.
 * CC_OK when it is a metric, CC_FAILED with the violations listed otherwise. */
CONTRACERT_API cc_status cc_validate_json(char const *space_json, double tol, char **report);

/* -- maps ------------------------------------------------------------------- */

/* A table document is checked against `space`. A builtin document brings its own
 * grid space, which is returned through `grid_space` (required in that case). */
CONTRACERT_API cc_status cc_map_from_json(char const *json, cc_space const *space, cc_map **out,
                                          cc_space **grid_space);
CONTRACERT_API cc_status cc_map_from_table(size_t const *table, size_t n, cc_map **out);
CONTRACERT_API size_t    cc_map_size(cc_map const *map);
CONTRACERT_API size_t    cc_map_image(cc_map const *map, size_t i);
CONTRACERT_API void      cc_map_free(cc_map *map);

/* -- gauges ----------------------------------------------------------------- */

CONTRACERT_API cc_status cc_alpha_parse(char const *spec, cc_alpha **out);
CONTRACERT_API cc_status cc_alpha_from_knots_json(char const *json, cc_alpha **out);
CONTRACERT_API double    cc_alpha_eval(cc_alpha const *alpha, double s);
CONTRACERT_API void      cc_alpha_free(cc_alpha *alpha);

CONTRACERT_API cc_status cc_phi_parse(char const *spec, cc_phi **out);
CONTRACERT_API cc_status cc_phi_from_knots_json(char const *json, cc_phi **out);
CONTRACERT_API double    cc_phi_eval(cc_phi const *phi, double s);
CONTRACERT_API void      cc_phi_free(cc_phi *phi);

/* JSON array of the builtin gauge specs. */
CONTRACERT_API cc_status cc_gauge_names(char **out);

CONTRACERT_API cc_status cc_theta(double r, double *out);

/* -- certifiers ------------------------------------------------------------- */

typedef struct cc_condition_params
{
  int             has_r;
  double          r;
  int             has_eta;
  double          eta;
  cc_phi const   *phi;   /* may be NULL */
  cc_alpha const *alpha; /* may be NULL */
} cc_condition_params;

/* condition: banach, contractive, boyd_wong, lim, generalized_phi, suzuki_2008,
 * half_condition, main, eta_alpha. `threads` = 0 uses the machine parallelism. */
CONTRACERT_API cc_status cc_certify(cc_space const *space, cc_map const *map, char const *condition,
                                    cc_condition_params const *params, unsigned threads, char **certificate);

/* CC_OK when r_star < 1. `certificate` may be NULL. */
CONTRACERT_API cc_status cc_banach_modulus(cc_space const *space, cc_map const *map, double *r_star,
                                           char **certificate);

/* Runs the default gauge library. CC_FAILED only if the implication lattice is violated. */
CONTRACERT_API cc_status cc_classify(cc_space const *space, cc_map const *map, char **report);

/* -- iteration -------------------------------------------------------------- */

CONTRACERT_API cc_status cc_iterate(cc_space const *space, cc_map const *map, size_t start, size_t max_iter,
                                    char **trace);
/* builtin: "halving" or "mobius" on [lo, hi]. */
CONTRACERT_API cc_status cc_iterate_real(char const *builtin, double lo, double hi, double x0, size_t max_iter,
                                         char **trace);
CONTRACERT_API cc_status cc_fixed_points(cc_map const *map, char **points);

/* CC_OK when the claim holds, CC_FAILED when violated or inconclusive. */
CONTRACERT_API cc_status cc_cauchy(cc_space const *space, cc_map const *map, size_t start, size_t max_iter,
                                   double epsilon, char **certificate);

/* z = SIZE_MAX uses the last point of the orbit. */
CONTRACERT_API cc_status cc_either_or(cc_space const *space, cc_map const *map, cc_alpha const *alpha, size_t start,
                                      size_t max_iter, size_t z, char **report);

/* -- falsifiers (CC_FAILED = something was falsified) ------------------------ */

CONTRACERT_API cc_status cc_falsify_admissibility(cc_phi const *phi, size_t min_points, size_t max_points,
                                                  uint64_t seed, size_t budget, unsigned threads, char **report);
CONTRACERT_API cc_status cc_falsify_l(cc_phi const *phi, char **report);
CONTRACERT_API cc_status cc_falsify_geraghty(cc_alpha const *alpha, char **report);
/* delta <= 0 uses the gauge's own delta, then a search over candidates. */
CONTRACERT_API cc_status cc_falsify_psi(cc_alpha const *alpha, double delta, char **report);
CONTRACERT_API cc_status cc_alpha0_estimate(cc_alpha const *alpha, double *out);
CONTRACERT_API cc_status cc_falsify_subsequence(cc_space const *space, cc_map const *map, size_t start,
                                                size_t budget, char **report);

/* -- campaigns and demos ---------------------------------------------------- */

CONTRACERT_API cc_status cc_lattice_campaign(size_t min_points, size_t max_points, uint64_t seed, size_t count,
                                             unsigned threads, char **report);
CONTRACERT_API cc_status cc_main_theorem_campaign(cc_alpha const *alpha, uint64_t seed, size_t spaces,
                                                  size_t points, unsigned threads, char **report);

CONTRACERT_API cc_status cc_demo_names(char **out);
/* CC_OK when the scenario shows what it is meant to show. */
CONTRACERT_API cc_status cc_demo(char const *name, uint64_t seed, unsigned threads, char **report);

#ifdef __cplusplus
}
#endif

#endif
