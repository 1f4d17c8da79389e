#include <stdio.h>
#include "springer.h"

int main(void) {
    SpringerPartition *p = NULL;
    if (springer_partition_parse("4,2", &p) != SPRINGER_STATUS_OK) {
        fprintf(stderr, "%s\n", springer_last_error());
        return 1;
    }
    uint64_t b[16];
    size_t len = 0;
    springer_betti_numbers(p, b, 16, &len);
    for (size_t k = 0; k < len; k++) {
        printf("b_%zu = %llu\n", k, (unsigned long long)b[k]);
    }
    char *json = NULL;
    bool ok = false;
    springer_verify_basis_json(p, &json, &ok);
    printf("verified: %s\n", ok ? "yes" : "no");
    springer_string_free(json);
    springer_partition_free(p);
    return 0;
}
