/* Copyright (C) 2026 The lpbm Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "lpbm/lpbm.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

struct buffer {
    char data[1 << 16];
    size_t size;
};

static void collect(const char* data, size_t size, void* user) {
    struct buffer* b = (struct buffer*)user;
    if (b->size + size >= sizeof b->data) size = sizeof b->data - b->size - 1;
    memcpy(b->data + b->size, data, size);
    b->size += size;
    b->data[b->size] = '\0';
}

static void test_means(void) {
    double out = 0.0;
    EXPECT(lpbm_p_mean(1.0, 0.5, 2.0, 4.0, &out) == LPBM_OK && fabs(out - 3.0) < 1e-12);
    EXPECT(lpbm_p_mean(0.0, 0.5, 2.0, 8.0, &out) == LPBM_OK && fabs(out - 4.0) < 1e-12);
    EXPECT(lpbm_p_mean(1.0, 1.5, 2.0, 4.0, &out) == LPBM_ERR_DOMAIN);
    EXPECT(strlen(lpbm_last_error()) > 0);
    EXPECT(lpbm_p_mean(1.0, 0.5, 2.0, 4.0, NULL) == LPBM_ERR_INVALID_ARGUMENT);

    const double p[2] = {1.0, 1.0};
    EXPECT(lpbm_gamma_compose(p, 2, INFINITY, &out) == LPBM_OK && fabs(out - 0.5) < 1e-12);
    EXPECT(lpbm_last_error()[0] == '\0');
    const double q[2] = {1.0, 1.0};
    EXPECT(lpbm_gamma_compose(q, 2, -0.5, &out) == LPBM_OK && isinf(out) && out < 0);
}

static void test_bodies(void) {
    const double r[2] = {1.0, 1.0};
    const double r2[2] = {2.0, 2.0};
    lpbm_body* a = NULL;
    lpbm_body* b = NULL;
    lpbm_body* c = NULL;
    EXPECT(lpbm_body_box(r, 2, &a) == LPBM_OK);
    EXPECT(lpbm_body_lq_ball(INFINITY, r2, 2, &b) == LPBM_OK);
    EXPECT(lpbm_body_dim(a) == 2);

    const double x[2] = {0.5, -0.9};
    int inside = 0;
    EXPECT(lpbm_body_contains(a, x, &inside) == LPBM_OK && inside == 1);
    const double u[2] = {0.6, 0.8};
    double h = 0.0;
    EXPECT(lpbm_body_support(a, u, &h) == LPBM_OK && fabs(h - 1.4) < 1e-12);

    const double p[2] = {1.0, 1.0};
    EXPECT(lpbm_body_coord_combine(a, b, 0.5, p, 64, &c) == LPBM_OK);
    lpbm_density* leb = NULL;
    EXPECT(lpbm_density_lebesgue(2, &leb) == LPBM_OK);
    double v = 0.0, err = 0.0;
    EXPECT(lpbm_measure(c, leb, 0, &v, &err) == LPBM_OK && fabs(v - 9.0) < 1e-6);
    EXPECT(lpbm_measure(a, leb, 0, &v, NULL) == LPBM_OK && fabs(v - 4.0) < 1e-9);

    struct buffer desc = {{0}, 0};
    EXPECT(lpbm_body_describe(a, collect, &desc) == LPBM_OK && strstr(desc.data, "radii") != NULL);

    lpbm_body* m = NULL;
    EXPECT(lpbm_body_minkowski_combine(a, b, 0.5, &m) == LPBM_OK);
    EXPECT(lpbm_body_support(m, u, &h) == LPBM_OK && fabs(h - 2.1) < 1e-9);

    const double r4[4] = {1, 1, 1, 1};
    lpbm_body* d4 = NULL;
    lpbm_body* bad = NULL;
    EXPECT(lpbm_body_box(r4, 4, &d4) == LPBM_OK);
    const double p4[4] = {1, 1, 1, 1};
    EXPECT(lpbm_body_coord_combine(d4, d4, 0.5, p4, 8, &bad) == LPBM_ERR_UNSUPPORTED && bad == NULL);

    const double neg[2] = {-1.0, 1.0};
    EXPECT(lpbm_body_box(neg, 2, &bad) == LPBM_ERR_DOMAIN && bad == NULL);
    EXPECT(lpbm_body_contains(NULL, x, &inside) == LPBM_ERR_INVALID_ARGUMENT);

    lpbm_density* pc = NULL;
    EXPECT(lpbm_density_power_convex(2, 0.5, 1.0, &pc) == LPBM_ERR_DOMAIN);

    lpbm_density_free(leb);
    lpbm_body_free(m);
    lpbm_body_free(d4);
    lpbm_body_free(c);
    lpbm_body_free(b);
    lpbm_body_free(a);
    lpbm_body_free(NULL);
}

static const char* kScenario =
    "{\"schema\": \"lpbm-scenario/1\","
    " \"bodies\": {\"a\": {\"family\": \"box\", \"radii\": [1, 1]}, \"b\": {\"family\": \"box\", \"radii\": [2, 2]}},"
    " \"densities\": {\"leb\": {\"family\": \"lebesgue\", \"dim\": 2}},"
    " \"checks\": [{\"id\": \"cubes\", \"kind\": \"check_bmi\","
    "   \"params\": {\"a\": \"a\", \"b\": \"b\", \"density\": \"leb\", \"p\": [1, 1], \"lambdas\": [0.5],"
    "   \"config\": {\"resolution\": 32}}}],"
    " \"curves\": {\"c\": {\"kind\": \"measure\", \"body\": \"a\", \"density\": \"leb\", \"transform\": \"t\","
    "   \"t\": [0.5, 1, 2]}}}";

static void test_scenario(void) {
    lpbm_scenario* sc = NULL;
    EXPECT(lpbm_scenario_parse("{\"schema\": \"lpbm-scenario/1\", \"extra\": 1}", NULL, &sc) == LPBM_ERR_CONFIG);
    EXPECT(sc == NULL);
    EXPECT(strlen(lpbm_last_error()) > 0);
    EXPECT(lpbm_scenario_load("/nonexistent/lpbm.config", NULL, &sc) == LPBM_ERR_CONFIG);

    const uint64_t seed = 5;
    EXPECT(lpbm_scenario_parse(kScenario, &seed, &sc) == LPBM_OK);
    EXPECT(lpbm_scenario_check_count(sc) == 1);

    struct buffer dump = {{0}, 0};
    EXPECT(lpbm_scenario_dump(sc, collect, &dump) == LPBM_OK && strstr(dump.data, "\"seed\": 5") != NULL);

    struct buffer csv = {{0}, 0};
    EXPECT(lpbm_scenario_emit_curve(sc, "c", collect, &csv) == LPBM_OK);
    EXPECT(strncmp(csv.data, "t,value,abs_error\n", 18) == 0);
    EXPECT(lpbm_scenario_emit_curve(sc, "nope", collect, &csv) == LPBM_ERR_CONFIG);

    lpbm_run* run = NULL;
    EXPECT(lpbm_scenario_run(sc, 0, &run) == LPBM_ERR_INVALID_ARGUMENT);
    EXPECT(lpbm_scenario_run(sc, 2, &run) == LPBM_OK);
    EXPECT(lpbm_run_report_count(run) == 1);
    EXPECT(lpbm_run_exit_status(run, 0) == 0);
    EXPECT(lpbm_run_exit_status(run, 1) == 1);

    struct buffer json = {{0}, 0};
    EXPECT(lpbm_run_report_json(run, collect, &json) == LPBM_OK && strstr(json.data, "\"boundary\"") != NULL);
    struct buffer detail = {{0}, 0};
    EXPECT(lpbm_run_detail_csv(run, collect, &detail) == LPBM_OK);
    EXPECT(strncmp(detail.data, "check,params_digest,", 20) == 0);
    struct buffer summary = {{0}, 0};
    EXPECT(lpbm_run_summary(run, 1, collect, &summary) == LPBM_OK && strstr(summary.data, "FAILED") != NULL);

    lpbm_run_free(run);
    lpbm_scenario_free(sc);
}

static void test_misc(void) {
    EXPECT(strcmp(lpbm_version(), "0.1.0") == 0);
    EXPECT(strcmp(lpbm_status_string(LPBM_ERR_CONFIG), "config error") == 0);
    struct buffer list = {{0}, 0};
    EXPECT(lpbm_list_checks(collect, &list) == LPBM_OK && strstr(list.data, "check_bmi") != NULL);
}

int main(void) {
    test_means();
    test_bodies();
    test_scenario();
    test_misc();
    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("capi: all passed\n");
    return failures ? 1 : 0;
}
