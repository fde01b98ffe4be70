/* C interface to the free Motzkin chain library.
 *
 * Every computation returns a heap-allocated report holding a JSON document
 * and a pass/fail verdict; callers must release it with fmz_report_free.
 * Functions return FMZ_OK when the computation ran and every check passed,
 * FMZ_CHECK_FAILED when it ran but a check failed (the report is still
 * produced), FMZ_INVALID_ARGUMENT or FMZ_INTERNAL_ERROR when no report is
 * produced; fmz_last_error then describes the problem (thread-local).
 */
#ifndef FMZ_H
#define FMZ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    FMZ_OK = 0,
    FMZ_CHECK_FAILED = 1,
    FMZ_INVALID_ARGUMENT = 2,
    FMZ_INTERNAL_ERROR = 3
} fmz_status;

typedef struct fmz_report fmz_report;

const char* fmz_version(void);

/* Message for the most recent failing call on this thread, or "". */
const char* fmz_last_error(void);

/* Report accessors. The JSON pointer is owned by the report. */
const char* fmz_report_json(const fmz_report* report);
int fmz_report_passed(const fmz_report* report);
void fmz_report_free(fmz_report* report);

/* Full or sector spectrum. epsilon is a rational literal "p/q" (or "p");
 * pass u = d = -1 for the full spectrum. Dense cap: length <= 8. */
fmz_status fmz_spectrum(int length, const char* epsilon, int u, int d, double tol,
                        fmz_report** out);

/* Ground-state degeneracy by explicit orbit construction; with_kernel != 0
 * cross-checks against the exact kernel dimension of H(L, 0). */
fmz_status fmz_gsd(int length, int with_kernel, fmz_report** out);

/* Exact relation checks. The JSON is an array of relation objects. */
fmz_status fmz_algebra_ptl(int length, fmz_report** out);
fmz_status fmz_algebra_flat(int length, fmz_report** out);
fmz_status fmz_algebra_s21(int length, fmz_report** out);

/* Yang-Baxter at one rational pair, or at `count` seeded random pairs with
 * numerators and denominators in [-9, 9] (poles skipped). */
fmz_status fmz_algebra_ybe(int length, const char* lambda1, const char* lambda2,
                           fmz_report** out);
fmz_status fmz_algebra_ybe_random(int length, int count, unsigned long seed,
                                  fmz_report** out);

/* Bethe solutions; `two` requires length >= 4. */
fmz_status fmz_bethe_one(int length, fmz_report** out);
fmz_status fmz_bethe_two(int length, fmz_report** out);

/* Bethe state for supplied momenta (parallel re/im arrays of size r) and a
 * flavor word over {u, d} of length r; reports energy and the residual
 * against the exact Hamiltonian, plus amplitudes when requested. */
fmz_status fmz_bethe_state(int length, const double* momenta_re, const double* momenta_im,
                           int r, const char* flavors, int with_amplitudes,
                           fmz_report** out);

/* Spectrum comparison against the independent spin-1/2 XXX oracle. */
fmz_status fmz_compare_xxx(int length, double tol, fmz_report** out);

/* Orbit of a configuration word (string over {u, f, d}). */
fmz_status fmz_paths_orbit(const char* config, fmz_report** out);

/* Product and entangled ground states with exact annihilation and span
 * checks (span check runs when length <= 6). */
fmz_status fmz_paths_ground_states(int length, fmz_report** out);

/* Audit of the displayed (1, 1) operator-action equations. */
fmz_status fmz_action_table(int length, const char* flavors, fmz_report** out);

#ifdef __cplusplus
}
#endif

#endif /* FMZ_H */
