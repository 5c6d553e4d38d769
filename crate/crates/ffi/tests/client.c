/* Licensed under the Apache License, Version 2.0. */
#include <stdio.h>
#include <string.h>

#include "cubecrux.h"

int main(void) {
    const char *json =
        "{\"hyperplanes\":[{\"id\":\"e\",\"weight\":\"2/3\"}],"
        "\"vertices\":[{\"id\":\"a\",\"signs\":{\"e\":\"-\"}},{\"id\":\"b\",\"signs\":{\"e\":\"+\"}}]}";
    CcChart *chart = NULL;
    if (cc_chart_from_json(json, &chart) != CC_OK) {
        fprintf(stderr, "%s\n", cc_last_error_message());
        return 1;
    }
    CcRational d;
    if (cc_chart_distance(chart, 0, 1, &d) != CC_OK) {
        return 1;
    }
    CcChart *bad = NULL;
    int code = cc_chart_from_json("{\"hyperplanes\":[{\"id\":\"e\",\"weight\":\"0\"}],"
                                 "\"vertices\":[{\"id\":\"a\",\"signs\":{\"e\":\"-\"}},{\"id\":\"b\",\"signs\":{\"e\":\"+\"}}]}", &bad);
    if (bad != NULL || strlen(cc_last_error_message()) == 0) {
        return 1;
    }
    printf("d=%lld/%lld code=%d ok\n", (long long)d.num, (long long)d.den, code);
    cc_chart_free(chart);
    return 0;
}
