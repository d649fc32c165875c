#include <cmath>
#include <cstring>
#include <string>

#include "adia/adia.h"
#include "doctest.h"

TEST_CASE("status names and classes") {
  CHECK(std::string(adia_status_name(ADIA_OK)) == "Ok");
  CHECK(adia_status_is_validation(ADIA_ERR_INVALID_ARGUMENT));
  CHECK(adia_status_is_validation(ADIA_ERR_NO_EIGENVALUE));
  CHECK(!adia_status_is_validation(ADIA_ERR_QUADRATURE_FAILURE));
  CHECK(!adia_status_is_validation(ADIA_OK));
  CHECK(std::strlen(adia_version()) > 0);
}

TEST_CASE("special functions by name") {
  adia_complex out{};
  REQUIRE(adia_special("int_l0", {1.0, 0.0}, 0.1, "none", &out) == ADIA_OK);
  CHECK(std::abs(out.re - (M_PI - 2.0)) < 1e-12);
  REQUIRE(adia_special("l0", {2.0, 0.0}, 0.1, "above", &out) == ADIA_OK);
  CHECK(std::abs(out.re - M_PI) < 1e-12);
  adia_complex below{};
  REQUIRE(adia_special("l0", {2.0, 0.0}, 0.1, "below", &below) == ADIA_OK);
  CHECK(std::abs(below.im + out.im) < 1e-12);
  CHECK(adia_special("nope", {0.0, 0.0}, 0.1, "none", &out) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(adia_last_error()).find("nope") != std::string::npos);
  CHECK(adia_special("l0", {0.0, 0.0}, 0.1, "sideways", &out) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(adia_special("l0", {0.0, 0.0}, 0.1, "none", nullptr) == ADIA_ERR_INVALID_ARGUMENT);
  std::size_t count = 0;
  while (adia_special_name(count)) ++count;
  CHECK(count == 19);
}

TEST_CASE("eigen data") {
  double tn = 0;
  REQUIRE(adia_tau_threshold(1, &tn) == ADIA_OK);
  CHECK(std::abs(tn - (1.0 - M_PI / 2)) < 1e-15);
  double p = 0, e = 0, d = 0;
  REQUIRE(adia_eigen(1, -2.0, &p, &e, &d) == ADIA_OK);
  CHECK(std::abs(3.0 * p + std::asin(p) - M_PI) < 1e-13);
  CHECK(std::abs(e - (p * p - 1.0)) < 1e-15);
  CHECK(adia_eigen(1, 0.0, &p, &e, &d) == ADIA_ERR_NO_EIGENVALUE);
  CHECK(adia_eigen(0, -1.0, &p, &e, &d) == ADIA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("series handle") {
  adia_series* s = nullptr;
  CHECK(adia_series_create(2.0, &s) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  REQUIRE(adia_series_create(0.2, &s) == ADIA_OK);
  adia_complex psi{};
  double err = -1;
  REQUIRE(adia_series_psi(s, 1, 0.0, -10.0, &psi, &err) == ADIA_OK);
  CHECK(psi.re == 0.0);
  CHECK(psi.im == 0.0);
  CHECK(adia_series_psi(nullptr, 1, 0.5, -10.0, &psi, &err) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(adia_series_psi(s, 1, -1.0, -10.0, &psi, &err) == ADIA_ERR_INVALID_ARGUMENT);
  adia_series_free(s);
  adia_series_free(nullptr);
}

TEST_CASE("tables") {
  adia_table* t = nullptr;
  REQUIRE(adia_field_table(0.2, 1, -10.0, 0.0, 2.0, 5, "series", &t) == ADIA_OK);
  CHECK(adia_table_rows(t) == 5);
  CHECK(adia_table_cols(t) == 5);
  CHECK(std::string(adia_table_column(t, 0)) == "x");
  CHECK(adia_table_column(t, 9) == nullptr);
  CHECK(adia_table_number(t, 4, 0) == 2.0);
  CHECK(adia_table_text(t, 0, 0) == nullptr);
  CHECK(std::isnan(adia_table_number(t, 99, 0)));
  adia_table_free(t);
  CHECK(adia_field_table(0.2, 1, -10.0, 0.0, 2.0, 5, "magic", &t) == ADIA_ERR_INVALID_ARGUMENT);

  REQUIRE(adia_compare_table(0.1, 1, -30.0, 4, 0.0, &t) == ADIA_OK);
  const std::size_t regime = adia_table_cols(t) - 1;
  CHECK(std::string(adia_table_column(t, regime)) == "regime");
  CHECK(std::string(adia_table_text(t, 0, regime)) == "adiabatic");
  CHECK(std::isnan(adia_table_number(t, 0, regime)));
  adia_table_free(t);
}

TEST_CASE("named checks") {
  adia_check_params p;
  adia_check_params_init(&p);
  CHECK(p.eps == nullptr);
  CHECK(std::isnan(p.tau));
  adia_table* t = nullptr;
  REQUIRE(adia_check("closed-form", &p, &t) == ADIA_OK);
  CHECK(adia_table_rows(t) > 0);
  adia_table_free(t);
  CHECK(adia_check("unknown", &p, &t) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(adia_check("closed-form", nullptr, &t) == ADIA_ERR_INVALID_ARGUMENT);
  std::size_t count = 0;
  while (adia_check_name(count)) ++count;
  CHECK(count == 14);
}

TEST_CASE("oracle") {
  adia_oracle_report r{};
  REQUIRE(adia_oracle(0.2, 1, -50.0, -49.0, 40.0, 1000, 0.02, "cell-average", &r) == ADIA_OK);
  CHECK(r.steps == 50);
  CHECK(r.norm_drift < 1e-10);
  CHECK(adia_oracle(0.2, 1, -50.0, -49.0, 40.0, 1000, 0.02, "rounded", &r) == ADIA_ERR_INVALID_ARGUMENT);
  CHECK(adia_oracle(0.2, 1, -50.0, -49.0, 40.0, 2, 0.02, "cell-average", &r) == ADIA_ERR_INVALID_ARGUMENT);
}
