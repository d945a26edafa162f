#include <stdio.h>
#include <string.h>

#include "lgvx.h"

static int expect(const char *what, LgvxStatus st, char *got, const char *want) {
    if (st != LGVX_STATUS_OK) {
        fprintf(stderr, "%s: status %d: %s\n", what, (int)st, lgvx_last_error());
        return 1;
    }
    int bad = strcmp(got, want) != 0;
    if (bad)
        fprintf(stderr, "%s: got %s, want %s\n", what, got, want);
    lgvx_string_free(got);
    return bad;
}

int main(void) {
    const char *graph =
        "variables x y\n"
        "vertex s 0 0\nvertex a 1 1\nvertex b -1 1\nvertex t 0 2\n"
        "edge s a x\nedge s b y\nedge a t y\nedge b t x\n"
        "source s\nsink t\nstarts s\nends t\n";
    int fails = 0;
    char *out = NULL;
    LgvxInstance *inst = NULL;
    LgvxStatus st = lgvx_instance_parse(graph, &inst);
    if (st != LGVX_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", lgvx_last_error());
        return 1;
    }
    fails += lgvx_instance_num_pairs(inst) != 1;
    st = lgvx_instance_count(inst, &out);
    fails += expect("count", st, out, "2*x*y");
    int64_t vals[2] = {3, 5};
    st = lgvx_instance_count_at(inst, vals, 2, &out);
    fails += expect("count_at", st, out, "30");
    lgvx_instance_free(inst);

    st = lgvx_aztec_formula(1, 1, 1, &out);
    fails += expect("formula", st, out, "36");

    LgvxRegion *r = NULL;
    if (lgvx_region_parse("aztec 1 1 full\n", &r) != LGVX_STATUS_OK)
        return 1;
    st = lgvx_region_count(r, LGVX_TILE_METHOD_BRUTE, &out);
    fails += expect("diamond", st, out, "2");
    lgvx_region_free(r);

    if (lgvx_instance_parse("vertex\n", &inst) == LGVX_STATUS_OK)
        fails++;
    if (fails == 0)
        printf("ok\n");
    return fails != 0;
}
