/* The public header must stay consumable from plain C. */

#include <stdio.h>
#include <string.h>

#include "trg/trg.h"

int main(void) {
    trg_graph* g = NULL;
    if (trg_graph_from_edge_list("4 3\n0 1\n1 2\n2 3\n", &g) != TRG_OK) {
        fprintf(stderr, "parse failed: %s\n", trg_last_error());
        return 1;
    }
    if (trg_graph_n(g) != 4 || trg_graph_m(g) != 3) return 1;

    uint64_t wedges = 0;
    if (trg_census_count(g, "K12", &wedges) != TRG_OK || wedges != 2) return 1;

    char* csv = NULL;
    if (trg_census_csv(g, &csv) != TRG_OK) return 1;
    if (strstr(csv, "K3,0") == NULL) return 1;
    trg_string_free(csv);
    trg_graph_free(g);

    char* thr = NULL;
    if (trg_threshold_json(1000.0, 0.01, 0, 0, &thr) != TRG_OK) return 1;
    trg_string_free(thr);
    return 0;
}
