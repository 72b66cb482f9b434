#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "aloha/aloha.h"

namespace {

const char* kScenario = R"({
  "shape":   { "kind": "exp_power", "params": { "a": 100, "b": 3 } },
  "lambda":  0.001,
  "channel": { "alpha": 2, "c": 1, "d": 10, "eta": 0.1, "beta": 0.5 }
})";

struct Handle {
    aloha_scenario* h = nullptr;
    ~Handle() { aloha_scenario_free(h); }
};

} // namespace

TEST_CASE("version string is non-empty") {
    REQUIRE(aloha_version() != nullptr);
    CHECK(std::strlen(aloha_version()) > 0);
}

TEST_CASE("parse, check, digest") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    char buf[4096];
    int n_err = -1, n_warn = -1;
    REQUIRE(aloha_scenario_check(sc.h, buf, sizeof buf, &n_err, &n_warn) ==
            ALOHA_OK);
    CHECK(n_err == 0);
    char digest[64] = {0};
    REQUIRE(aloha_scenario_digest(sc.h, digest, sizeof digest) == ALOHA_OK);
    CHECK(std::strlen(digest) > 0);
}

TEST_CASE("parse failure reports status and message") {
    aloha_scenario* h = nullptr;
    CHECK(aloha_scenario_parse("{broken", &h) == ALOHA_ERR_PARSE);
    CHECK(h == nullptr);
    CHECK(std::strlen(aloha_last_error()) > 0);
}

TEST_CASE("null-argument guard") {
    CHECK(aloha_scenario_parse(nullptr, nullptr) == ALOHA_ERR_INVALID_ARG);
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    CHECK(aloha_outage(sc.h, 0.0, nullptr) == ALOHA_ERR_INVALID_ARG);
    CHECK(aloha_outage(nullptr, 0.0, nullptr) == ALOHA_ERR_INVALID_ARG);
    aloha_scenario_free(nullptr); // no-op, must not crash
}

TEST_CASE("scalar surface: shape, path loss, moments, outage") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);

    double F0 = 0.0, F100 = 0.0;
    REQUIRE(aloha_shape_eval(sc.h, 0.0, &F0) == ALOHA_OK);
    REQUIRE(aloha_shape_eval(sc.h, 100.0, &F100) == ALOHA_OK);
    CHECK(F0 == 1.0);
    CHECK(F100 == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    double pl = 0.0;
    REQUIRE(aloha_path_loss(sc.h, 10.0, &pl) == ALOHA_OK);
    CHECK(pl == doctest::Approx(1.0 / 101.0).epsilon(1e-14)); // alpha = 2

    double mi = 0.0, L = 0.0, q = 0.0;
    REQUIRE(aloha_mean_interference(sc.h, 0.0, &mi) == ALOHA_OK);
    CHECK(mi > 0.0);
    REQUIRE(aloha_laplace_interference(sc.h, 0.0, 0.0, &L) == ALOHA_OK);
    CHECK(L == 1.0);
    REQUIRE(aloha_outage(sc.h, 0.0, &q) == ALOHA_OK);
    CHECK(q > 0.0);
    CHECK(q < 1.0);
}

TEST_CASE("domain errors map to dedicated statuses") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    double out = 0.0;
    // approx outage is alpha=4 only; this scenario is alpha=2
    CHECK(aloha_approx_outage(sc.h, 0.0, &out) == ALOHA_ERR_DOMAIN);
    CHECK(std::string(aloha_last_error()).size() > 0);

    // noise-limited dtc
    Handle noisy;
    REQUIRE(aloha_scenario_parse(R"({
      "shape":   { "kind": "exp_power", "params": { "a": 100, "b": 3 } },
      "lambda":  0.001,
      "channel": { "alpha": 2, "c": 1, "d": 10, "eta": 10.0, "beta": 0.5 }
    })",
                                 &noisy.h) == ALOHA_OK);
    CHECK(aloha_dtc(noisy.h, 0.0, 0.1, &out) == ALOHA_ERR_INFEASIBLE);

    // ast on a heavy tail
    Handle flat;
    REQUIRE(aloha_scenario_parse(R"({
      "shape":   { "kind": "constant" },
      "lambda":  0.01,
      "channel": { "alpha": 4, "c": 1, "d": 10, "eta": 0, "beta": 1 }
    })",
                                 &flat.h) == ALOHA_OK);
    CHECK(aloha_ast(flat.h, nullptr, &out) == ALOHA_ERR_TAIL_CONDITION);
}

TEST_CASE("throughput surface") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    double v = 0.0;
    REQUIRE(aloha_dtc(sc.h, 20.0, 0.1, &v) == ALOHA_OK);
    CHECK(v > 0.0);
    double omega = 0.0, omega2 = 0.0;
    REQUIRE(aloha_ast(sc.h, nullptr, &omega) == ALOHA_OK);
    const double beta2 = 2.0;
    REQUIRE(aloha_ast(sc.h, &beta2, &omega2) == ALOHA_OK);
    CHECK(omega > omega2); // higher threshold, lower throughput
    double rate = 0.0;
    REQUIRE(aloha_sum_rate(sc.h, 1e-2, 0.5, &rate) == ALOHA_OK);
    CHECK(rate > 0.0);
}

TEST_CASE("gamma ratio via the C surface (alpha=4 scenario)") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(R"({
      "shape":   { "kind": "exp_power", "params": { "a": 100, "b": 3 } },
      "lambda":  0.001,
      "channel": { "alpha": 4, "c": 1, "d": 10, "eta": 0, "beta": 1 }
    })",
                                 &sc.h) == ALOHA_OK);
    double g = 0.0;
    REQUIRE(aloha_gamma_ratio(sc.h, 0.0, &g) == ALOHA_OK);
    CHECK(g > 0.0);
}

TEST_CASE("simulation surface is deterministic in the seed") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    aloha_estimate a, b;
    REQUIRE(aloha_sim_outage(sc.h, 20.0, 3000, 77, nullptr, &a) == ALOHA_OK);
    REQUIRE(aloha_sim_outage(sc.h, 20.0, 3000, 77, nullptr, &b) == ALOHA_OK);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.trials == 3000);
    CHECK(a.master_seed == 77);
}

TEST_CASE("run_checks reports pass lines on a valid scenario") {
    Handle sc;
    REQUIRE(aloha_scenario_parse(kScenario, &sc.h) == ALOHA_OK);
    std::string buf(1 << 15, '\0');
    int n_failed = -1;
    REQUIRE(aloha_run_checks(sc.h, 0, 0, 1, buf.data(), buf.size(),
                             &n_failed) == ALOHA_OK);
    CHECK(n_failed == 0);
    CHECK(buf.find("PASS") != std::string::npos);
}
