/*
 * polyu2 - C API for the polynomial u(2) algebra toolkit.
 *
 * Constructs finite unitary representations of r-parameter polynomial u(2)
 * algebras, their contraction to generalized Weyl-Heisenberg algebras, the
 * two-boson realization of the cubic Higgs algebra, and the Bargmann
 * coherent-state calculus. All results can be verified exactly (rational /
 * radical arithmetic) or in 64-bit floats.
 *
 * Conventions:
 *  - half-integers (j, m) are passed as doubled integers: j = j_twice / 2;
 *  - deformation parameters are passed as comma-separated rationals, e.g.
 *    "-1/2" or "1/3,1/5"; float mode additionally accepts decimals;
 *  - every object is immutable after construction and safe to share across
 *    threads; the last-error message is thread-local;
 *  - strings returned through char** are heap-allocated, release them with
 *    pu2_string_free().
 */
#ifndef POLYU2_H
#define POLYU2_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum pu2_status {
    PU2_OK = 0,
    PU2_VERIFY_FAILED = 1,    /* an identity check did not pass */
    PU2_INVALID_ARGUMENT = 2, /* parse/config error */
    PU2_DOMAIN_ERROR = 3,     /* non-unitarizable / unsupported kappa / domain too small */
    PU2_INTERNAL_ERROR = 4
} pu2_status;

typedef enum pu2_mode {
    PU2_MODE_EXACT = 0, /* arbitrary-precision rationals and radicals */
    PU2_MODE_FLOAT = 1  /* 64-bit floats, 1e-12 relative tolerance */
} pu2_mode;

typedef struct pu2_rep pu2_rep;       /* unitary representation of u_kappa(2) */
typedef struct pu2_space pu2_space;   /* two-mode A_kappa Fock space */
typedef struct pu2_report pu2_report; /* verification report */

const char* pu2_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* pu2_last_error(void);

void pu2_string_free(char* s);
void pu2_rep_free(pu2_rep* rep);
void pu2_space_free(pu2_space* space);
void pu2_report_free(pu2_report* report);

/* --- scalar structure functions (float evaluation) --- */

/* Phi(j, m) = (j+m)(1+j-m) prod_i (1 + kappa_i(j+m-1)) */
pu2_status pu2_phi(int j_twice, int m_twice, const char* kappa, double* out);
/* G(j, m) = Phi(j, m) - Phi(j, m+1) */
pu2_status pu2_g(int j_twice, int m_twice, const char* kappa, double* out);
/* F(n) = n(1 + kappa(n-1)); kappa is a single parameter */
pu2_status pu2_f_wh(int n, const char* kappa, double* out);
/* f(n) = F(n) F(2j-n+1) */
pu2_status pu2_f_higgs(int n, int j_twice, const char* kappa, double* out);
/* Phi_inf(n) = n prod_i (1 + kappa_i(n-1)) */
pu2_status pu2_phi_inf(int n, const char* kappa, double* out);

/* --- representations --- */

/* Positivity scan: dimension of the unitary chain at (j, kappa) and whether
 * it closes on an exact zero of Phi (clean = 1) or a negative value. */
pu2_status pu2_dimension(int j_twice, const char* kappa, pu2_mode mode, int* out_dim,
                         int* out_clean);

pu2_status pu2_rep_build(int j_twice, const char* kappa, pu2_mode mode, pu2_rep** out);
int pu2_rep_dimension(const pu2_rep* rep);
pu2_status pu2_rep_nilpotency(const pu2_rep* rep, int* out);
pu2_status pu2_rep_verify(const pu2_rep* rep, pu2_report** out);
/* Serialized matrices (label, dim, basis, entries). */
pu2_status pu2_rep_to_json(const pu2_rep* rep, char** out);
/* Verification document; *out_passed = 1 iff all checks passed. Returns
 * PU2_VERIFY_FAILED (with the document still written) when they did not. */
pu2_status pu2_rep_verify_json(const pu2_rep* rep, char** out, int* out_passed);

/* --- reports --- */

int pu2_report_passed(const pu2_report* report);
double pu2_report_max_residual(const pu2_report* report);
pu2_status pu2_report_to_json(const pu2_report* report, char** out);

/* --- contraction --- */

/* Ordinary two-boson Schwinger realization check on all sectors j <= j_max. */
pu2_status pu2_schwinger_check(int j_max_twice, pu2_mode mode, pu2_report** out);

/* Phi_j(n)/(2j) vs Phi_inf(n) for n = 0..n_max over the given j list;
 * format 0 = JSON, 1 = CSV (header j,n,contracted,limit,abs_error). */
pu2_status pu2_contract_table(int n_max, const char* kappa, const int* j_twice_list,
                              int j_count, pu2_mode mode, int as_csv, char** out);

/* One-mode A_kappa relation check on levels 0..n_cap-1. */
pu2_status pu2_a_kappa_check(const char* kappa, int n_cap, pu2_mode mode, pu2_report** out);

/* --- two-mode Higgs realization --- */

/* kappa < 0 requires -1/kappa to be a positive integer; cap must then equal
 * d = 1 - 1/kappa (pass cap = 0 to use d automatically). */
pu2_status pu2_space_build(const char* kappa, int cap, pu2_mode mode, pu2_space** out);
int pu2_space_dim(const pu2_space* space);
int pu2_space_cap(const pu2_space* space);
int pu2_space_closed(const pu2_space* space);
pu2_status pu2_space_verify(const pu2_space* space, pu2_report** out);
pu2_status pu2_sector_ladder_check(const pu2_space* space, int j_twice, pu2_report** out);
/* Sector decomposition + cubic-commutator verification document. */
pu2_status pu2_space_report_json(const pu2_space* space, char** out, int* out_passed);

/* --- Bargmann sector calculus --- */

/* Coherent-state document at z = "re" (exact: rational) or "re,im" (float).
 * Pass z = NULL for z = 0. */
pu2_status pu2_coherent_json(int j_twice, const char* kappa, const char* z, pu2_mode mode,
                             char** out);
/* |N|^2 at |z|^2 = z_abs2 (float evaluation). */
pu2_status pu2_normalization2(int j_twice, const char* kappa, double z_abs2, double* out);

#ifdef __cplusplus
}
#endif

#endif /* POLYU2_H */
