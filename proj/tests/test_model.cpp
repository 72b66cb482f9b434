#include <doctest.h>

#include <cmath>

#include "core/scenario.hpp"

using namespace aloha;

namespace {
const char* kGoodJson = R"({
  "shape":   { "kind": "exp_power", "params": { "a": 100, "b": 3 } },
  "lambda":  0.001,
  "channel": { "alpha": 2, "c": 1, "d": 10, "eta": 0.1, "beta": 0.5 }
})";
}

TEST_CASE("parse_scenario round trip") {
    auto s = parse_scenario(kGoodJson);
    CHECK(s.lambda == 0.001);
    CHECK(s.channel.alpha == 2);
    CHECK(s.channel.c == 1.0);
    CHECK(s.channel.d == 10.0);
    CHECK(s.channel.eta == 0.1);
    CHECK(s.channel.beta == 0.5);
    CHECK(s.shape.kind() == "exp_power");
    CHECK(s.shape.eval(100.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("parse_scenario accepts dB strings for eta and beta") {
    auto s = parse_scenario(R"({
      "shape":   { "kind": "constant" },
      "lambda":  0.01,
      "channel": { "alpha": 4, "c": 1, "d": 10, "eta": "-8dB", "beta": "3dB" }
    })");
    CHECK(s.channel.eta == doctest::Approx(std::pow(10.0, -0.8)).epsilon(1e-12));
    CHECK(s.channel.beta == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-12));
}

TEST_CASE("parse_scenario error messages name the offending key") {
    CHECK_THROWS_AS(parse_scenario("{not json"), ParseError);
    try {
        parse_scenario(R"({"shape":{"kind":"constant"},"lambda":"x",
                          "channel":{"alpha":4,"c":1,"d":10,"eta":0,"beta":1}})");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("lambda") != std::string::npos);
    }
    try {
        parse_scenario(R"({"shape":{"kind":"no_such_shape"},"lambda":1,
                          "channel":{"alpha":4,"c":1,"d":10,"eta":0,"beta":1}})");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("kind") != std::string::npos);
    }
}

TEST_CASE("validate_scenario accepts the reference case") {
    auto s = parse_scenario(kGoodJson);
    auto v = validate_scenario(s);
    CHECK(!has_errors(v));
}

TEST_CASE("validate_scenario rejects alpha=2 with a dense tail") {
    NetworkScenario s;
    s.shape = ShapeFunction::constant(); // nu = 0
    s.lambda = 0.01;
    s.channel.alpha = 2;
    auto v = validate_scenario(s);
    CHECK(has_errors(v));
}

TEST_CASE("validate_scenario warns (not errors) when nu <= 2") {
    NetworkScenario s;
    s.shape = ShapeFunction::constant();
    s.lambda = 0.01;
    s.channel.alpha = 4;
    auto v = validate_scenario(s);
    CHECK(!has_errors(v));
    bool warned = false;
    for (auto& x : v)
        warned |= x.severity == Violation::Severity::Warning;
    CHECK(warned);
}

TEST_CASE("validate_scenario rejects non-positive lambda") {
    NetworkScenario s;
    s.shape = ShapeFunction::exp_power(100, 3);
    s.lambda = 0.0;
    s.channel.alpha = 4;
    CHECK(has_errors(validate_scenario(s)));
}

TEST_CASE("channel parameter range checks") {
    ChannelParams ch;
    ch.alpha = 3;
    CHECK_THROWS_AS(ch.check(), DomainError);
    ch.alpha = 4;
    ch.c = 0.0;
    CHECK_THROWS_AS(ch.check(), DomainError);
    ch.c = 1.0;
    ch.beta = -1.0;
    CHECK_THROWS_AS(ch.check(), DomainError);
}

TEST_CASE("path loss and SINR") {
    ChannelParams ch; // alpha=4, c=1, d=10, eta=0, beta=1
    CHECK(path_loss(0.0, ch) == 1.0);
    CHECK(path_loss(10.0, ch) == doctest::Approx(1.0 / 10001.0).epsilon(1e-14));
    // zero interference, zero noise: infinite SINR
    CHECK(std::isinf(sinr(1.0, 0.0, ch)));
    // unit gain, interference I: SINR = path_loss(d) / I
    CHECK(sinr(1.0, 0.5, ch) ==
          doctest::Approx(path_loss(10.0, ch) / 0.5).epsilon(1e-12));
}

TEST_CASE("digest is stable and parameter-sensitive") {
    auto s1 = parse_scenario(kGoodJson);
    auto s2 = parse_scenario(kGoodJson);
    CHECK(scenario_digest(s1) == scenario_digest(s2));
    auto s3 = s1;
    s3.lambda = 0.002;
    CHECK(scenario_digest(s1) != scenario_digest(s3));
}

TEST_CASE("eta_at_distance follows the reference-distance convention") {
    ChannelParams ch;
    ch.alpha = 4;
    ch.c = 1.0;
    ch.eta = 0.1;
    CHECK(eta_at_distance(ch, kEtaReferenceDistance) ==
          doctest::Approx(0.1).epsilon(1e-12));
    // doubling the distance at alpha=4: (1+20^4)/(1+10^4) ~ 16x
    CHECK(eta_at_distance(ch, 20.0) ==
          doctest::Approx(0.1 * (1.0 + 160000.0) / (1.0 + 10000.0))
              .epsilon(1e-12));
}
