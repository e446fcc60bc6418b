// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface through the C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "satstat.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    satstat_string_free(s);
    return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status strings") {
    CHECK(satstat_version() != nullptr);
    CHECK(std::strcmp(satstat_status_name(SATSTAT_OK), "ok") == 0);
    CHECK(satstat_status_name(SATSTAT_EDEGENERATE) != nullptr);
}

TEST_CASE("schur evaluation through the C surface") {
    const uint32_t kappa0[] = {0, 0};
    const double angles[] = {0.1, 0.2};
    double re = -1.0, im = -1.0;
    CHECK(satstat_schur_eval_tableaux(3, kappa0, angles, 2, &re, &im) == SATSTAT_OK);
    CHECK(re == doctest::Approx(1.0));
    CHECK(im == doctest::Approx(0.0));

    // free point on the full torus: e_1 at angles (0, pi/2, pi)
    const uint32_t e1[] = {0, 1};  // shape (1)
    const double free_angles[] = {0.0, M_PI / 2.0, M_PI};
    CHECK(satstat_schur_eval_tableaux(3, e1, free_angles, 3, &re, &im) == SATSTAT_OK);
    CHECK(re == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(im == doctest::Approx(1.0));

    // determinant route agrees away from degeneracy
    double re2 = 0.0, im2 = 0.0;
    const double sep[] = {0.7, 2.1};
    CHECK(satstat_schur_eval_tableaux(3, e1, sep, 2, &re, &im) == SATSTAT_OK);
    CHECK(satstat_schur_eval_determinant(3, e1, sep, 2, &re2, &im2) == SATSTAT_OK);
    CHECK(re == doctest::Approx(re2).epsilon(1e-9));
    CHECK(im == doctest::Approx(im2).epsilon(1e-9));

    // coincident points: degenerate for the determinant route only
    const double coincident[] = {0.0, 0.0};
    CHECK(satstat_schur_eval_determinant(3, e1, coincident, 2, &re, &im) == SATSTAT_EDEGENERATE);
    CHECK(std::strlen(satstat_last_error()) > 0);
    CHECK(satstat_schur_eval_tableaux(3, e1, coincident, 2, &re, &im) == SATSTAT_OK);

    // bad rank
    CHECK(satstat_schur_eval_tableaux(1, e1, sep, 1, &re, &im) == SATSTAT_EINVAL);
    CHECK(satstat_schur_eval_tableaux(3, e1, sep, 5, &re, &im) == SATSTAT_EINVAL);
}

TEST_CASE("dimension and dual") {
    const uint32_t k11[] = {1, 1};
    char* dim = nullptr;
    CHECK(satstat_dimension(3, k11, &dim) == SATSTAT_OK);
    CHECK(take(dim) == "8");

    const uint32_t k10[] = {1, 0};
    uint32_t dual[2] = {9, 9};
    CHECK(satstat_kappa_dual(3, k10, dual) == SATSTAT_OK);
    CHECK(dual[0] == 0);
    CHECK(dual[1] == 1);
}

TEST_CASE("hecke expansion handles") {
    const uint32_t k10[] = {1, 0};
    satstat_expansion* e = nullptr;
    REQUIRE(satstat_hecke_expand(3, k10, k10, &e) == SATSTAT_OK);
    CHECK(satstat_expansion_size(e) == 2);

    uint32_t xi[2];
    char* coeff = nullptr;
    CHECK(satstat_expansion_entry(e, 0, xi, &coeff) == SATSTAT_OK);
    CHECK(xi[0] == 2);
    CHECK(xi[1] == 0);
    CHECK(take(coeff) == "1");
    CHECK(satstat_expansion_entry(e, 1, xi, &coeff) == SATSTAT_OK);
    CHECK(xi[0] == 0);
    CHECK(xi[1] == 1);
    CHECK(take(coeff) == "1");
    CHECK(satstat_expansion_entry(e, 2, xi, &coeff) == SATSTAT_ERANGE);

    char* csv = nullptr;
    CHECK(satstat_expansion_csv(e, &csv) == SATSTAT_OK);
    CHECK(take(csv) == "xi,coefficient\n2-0,1\n0-1,1\n");
    satstat_expansion_free(e);
}

TEST_CASE("forms through the C surface") {
    satstat_form* form = nullptr;
    REQUIRE(satstat_form_create(3, SATSTAT_MEASURE_SATO_TATE, 0, 99, 1000, "7,11", &form) ==
            SATSTAT_OK);

    const uint32_t k11[] = {1, 1};
    double re = 0.0, im = 0.0;
    CHECK(satstat_form_coefficient(form, 1, k11, &re, &im) == SATSTAT_OK);
    CHECK(re == doctest::Approx(1.0));
    CHECK(satstat_form_coefficient(form, 7, k11, &re, &im) == SATSTAT_OK);
    CHECK(re == 0.0);
    CHECK(im == 0.0);

    // multiplicativity across the C boundary
    double re6, im6, re2, im2, re3, im3;
    CHECK(satstat_form_coefficient(form, 6, k11, &re6, &im6) == SATSTAT_OK);
    CHECK(satstat_form_coefficient(form, 2, k11, &re2, &im2) == SATSTAT_OK);
    CHECK(satstat_form_coefficient(form, 3, k11, &re3, &im3) == SATSTAT_OK);
    CHECK(re6 == doctest::Approx(re2 * re3 - im2 * im3).epsilon(1e-10));

    double angles[3];
    CHECK(satstat_form_satake_angles(form, 13, angles) == SATSTAT_OK);
    const double prod_angle = angles[0] + angles[1] + angles[2];
    CHECK(std::abs(std::remainder(prod_angle, 2.0 * M_PI)) < 1e-9);
    CHECK(satstat_form_satake_angles(form, 6, angles) == SATSTAT_ERANGE);

    CHECK(satstat_form_coefficient(form, 2000, k11, &re, &im) == SATSTAT_ERANGE);
    satstat_form_free(form);

    CHECK(satstat_form_create(3, SATSTAT_MEASURE_PLANCHEREL, 0, 1, 100, "none", &form) ==
          SATSTAT_EINVAL);
    CHECK(satstat_form_create(3, SATSTAT_MEASURE_SATO_TATE, 0, 1, 100, "not-a-spec", &form) ==
          SATSTAT_EINVAL);
}

TEST_CASE("sampling through the C surface") {
    std::vector<double> angles(5 * 3);
    CHECK(satstat_sample_angles(3, SATSTAT_MEASURE_SATO_TATE, 0, 42, 5, angles.data()) ==
          SATSTAT_OK);
    for (int i = 0; i < 5; ++i) {
        const double s = angles[i * 3] + angles[i * 3 + 1] + angles[i * 3 + 2];
        CHECK(std::abs(std::remainder(s, 2.0 * M_PI)) < 1e-9);
    }
    // determinism
    std::vector<double> again(5 * 3);
    CHECK(satstat_sample_angles(3, SATSTAT_MEASURE_SATO_TATE, 0, 42, 5, again.data()) ==
          SATSTAT_OK);
    CHECK(angles == again);

    char* csv = nullptr;
    CHECK(satstat_sample_csv(2, SATSTAT_MEASURE_PLANCHEREL, 5, 7, 3, &csv) == SATSTAT_OK);
    const std::string text = take(csv);
    CHECK(text.rfind("seed,index,theta_1,theta_2\n", 0) == 0);
    CHECK(text.find("7,0,") != std::string::npos);
}

TEST_CASE("experiment runner round trip") {
    const char* config = R"({"experiment":"signs","n":3,"kappa":[1,1],"seed":7,"X":5000})";
    char* report = nullptr;
    char* csv = nullptr;
    int pass = -1;
    REQUIRE(satstat_experiment_run(config, &report, &csv, &pass) == SATSTAT_OK);
    const std::string text = take(report);
    CHECK(csv == nullptr);  // signs has no CSV artifact
    CHECK(pass == 1);
    CHECK(text.find("\"command\": \"experiment signs\"") != std::string::npos);
    CHECK(text.find("\"positive_fraction\"") != std::string::npos);

    CHECK(satstat_experiment_run("{\"experiment\":\"bogus\"}", &report, &csv, &pass) ==
          SATSTAT_EINVAL);
    CHECK(satstat_experiment_run("not json", &report, &csv, &pass) == SATSTAT_EINVAL);
}

}  // TEST_SUITE
