#include "arcspline.h"

#include <stdio.h>

int run(void) {
    ArcsplineVec2 pts[3] = {{0.0, 0.0}, {1.0, 1.0}, {2.0, 0.0}};
    ArcsplineFamily *family = NULL;
    ArcsplinePolyarc *spline = NULL;
    ArcsplineSearch search = arcspline_search_default();
    ArcsplineMetrics metrics;
    double theta0 = 0.0;

    if (arcspline_family_new(pts, 3, false, &family) != ARCSPLINE_STATUS_OK) {
        fprintf(stderr, "%s\n", arcspline_last_error_message());
        return 1;
    }
    ArcsplineStatus st = arcspline_family_smooth(family, ARCSPLINE_OBJECTIVE_ENERGY, &search, 1.0, &theta0,
                                                 &metrics, &spline);
    if (st == ARCSPLINE_STATUS_OK) {
        char *json = NULL;
        arcspline_polyarc_to_json(spline, true, &json);
        puts(json);
        arcspline_string_free(json);
    }
    arcspline_polyarc_free(spline);
    arcspline_family_free(family);
    return st == ARCSPLINE_STATUS_OK ? 0 : 1;
}
