/* polarforge — polar code construction and analysis toolkit.
 *
 * C interface to the shared library. All structured inputs are JSON
 * strings; outputs are heap-allocated strings owned by the caller and
 * released with pf_string_free(). Functions return pf_status; on failure
 * pf_last_error() describes the problem (thread-local).
 */

#ifndef POLARFORGE_H
#define POLARFORGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
    PF_OK = 0,
    PF_EINVAL = 2, /* bad parameters / infeasible request */
    PF_EDATA = 3,  /* malformed input document */
    PF_EINTERNAL = 4
} pf_status;

typedef struct pf_design pf_design;

const char* pf_version(void);

/* Last error message for the calling thread ("" if none). */
const char* pf_last_error(void);

void pf_string_free(char* s);
void pf_design_free(pf_design* d);

/* params: {"n":128,"k":64,"channel":{"kind":"awgn","ebn0_db":4.0},
 *          "strategy":"reliability"|"mixed","alpha":100,"degree_cap":null} */
pf_status pf_design_build(const char* params_json, pf_design** out);

pf_status pf_design_from_json(const char* doc, pf_design** out);
pf_status pf_design_to_json(const pf_design* d, char** out_json);

/* Weight-spectrum and bound metrics; channel_json NULL reuses the design
 * channel, else overrides it. */
pf_status pf_design_analyze(const pf_design* d, const char* channel_json,
                            char** out_json);

pf_status pf_design_compare(const pf_design* a, const pf_design* b,
                            const char* channel_json, char** out_json);

/* params: {"n":16,"k":8,"family":"bec"|"awgn","rho_grid":[...]} -> CSV */
pf_status pf_sweep_run(const char* params_json, char** out_csv);

/* params: {"design":{...} or "design_doc":"...", "decoder":"sc"|"scl",
 *          "list_size":8,"pretransform":"none"|"crc"|"pac",
 *          "crc_poly":3078,"crc_len":12,"ebn0_grid_db":[...],
 *          "max_blocks":...,"target_errors":...,"seed":...,"workers":...,
 *          "exact_llr":false,"noiseless":false} -> CSV */
pf_status pf_simulate_run(const char* params_json, char** out_csv);

/* params: {"exhaustive_max_m":4,"sampled_sets":200,"sample_max_k":20,
 *          "seed":1} -> JSON report with "pass" flag */
pf_status pf_oracle_check(const char* params_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* POLARFORGE_H */
