#include <stdio.h>
#include <string.h>

#include "orbitcoh.h"

int main(void) {
    OrbitcohCatalog *cat = NULL;
    if (orbitcoh_catalog_load_embedded(&cat) != ORBITCOH_STATUS_OK) return 1;

    uint32_t n = 0;
    if (orbitcoh_orbit_count(cat, "E7(7)", &n) != ORBITCOH_STATUS_OK || n != 94) return 2;

    OrbitcohValueKind kind;
    if (orbitcoh_h2(cat, "E8(8)", "00100101", &kind, &n) != ORBITCOH_STATUS_OK) return 3;
    if (kind != ORBITCOH_VALUE_KIND_UPPER_BOUND || n != 3) return 4;

    if (orbitcoh_h2(cat, "F4(4)", "1001", &kind, &n) != ORBITCOH_STATUS_UNLISTED_LABEL) return 5;
    if (strlen(orbitcoh_last_error_message()) == 0) return 6;

    char *folded = NULL;
    if (orbitcoh_fold_e6("twisted-affine", &folded) != ORBITCOH_STATUS_OK) return 7;
    int ok = strcmp(folded, "C4") == 0;
    orbitcoh_string_free(folded);
    orbitcoh_catalog_free(cat);
    if (!ok) return 8;

    puts("ok");
    return 0;
}
