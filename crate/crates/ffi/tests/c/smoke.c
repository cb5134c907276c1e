#include <stdio.h>
#include <string.h>
#include "nilcascade.h"

int main(void) {
    NcOrder *order = NULL;
    const char *json = "{\"system\":\"A\",\"top\":{\"kind\":\"arith\",\"start\":1,\"step\":2},"
                       "\"bottom\":{\"kind\":\"arith\",\"start\":2,\"step\":2}}";
    if (nc_order_from_json(json, &order) != NC_STATUS_OK) return 1;
    char *out = NULL;
    if (nc_cascade_json(order, 3, &out) != NC_STATUS_OK) return 2;
    int ok = strstr(out, "\"e5-e6\"") != NULL;
    printf("%s\n", out);
    nc_string_free(out);
    if (nc_central_generator_json(order, "e1-e3", &out) != NC_STATUS_NOT_IN_CASCADE) return 3;
    if (strlen(nc_last_error_message()) == 0) return 4;
    nc_order_free(order);
    return ok ? 0 : 5;
}
