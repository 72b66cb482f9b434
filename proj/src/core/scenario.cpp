#include "core/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aloha {

namespace {

void check_shape_restrictions(const ShapeFunction& shape,
                              std::vector<Violation>& out) {
    using S = Violation::Severity;
    // Positiveness on a log-spaced sample grid.
    for (int i = 0; i <= 60; ++i) {
        const double r = i == 0 ? 0.0 : std::pow(10.0, -2.0 + i * 0.1);
        if (shape.eval(r) < 0.0) {
            std::ostringstream os;
            os << "shape: F(" << r << ") < 0 violates positiveness";
            out.push_back({S::Error, os.str()});
            break;
        }
    }
    // Normalization at the declared maximizer.
    const double fmax = shape.eval(shape.maximizer());
    if (std::abs(fmax - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "shape: F(maximizer)=" << fmax << " violates normalization max F = 1";
        out.push_back({S::Error, os.str()});
    }
    // Spot-check deriv against a central finite difference between breakpoints.
    const auto& bp = shape.breakpoints();
    const double far = bp.empty() ? 100.0 : bp.back();
    std::vector<double> probes{0.35 * far + 0.1, 0.7 * far + 0.2, 1.3 * far + 0.3};
    for (double r : probes) {
        bool near_bp = false;
        for (double b : bp)
            if (std::abs(r - b) < 1e-3 * (1.0 + far))
                near_bp = true;
        for (const Jump& j : shape.jumps())
            if (std::abs(r - j.r) < 1e-3 * (1.0 + far))
                near_bp = true;
        if (near_bp)
            continue;
        const double h = 1e-5 * (1.0 + r);
        const double fd = (shape.eval(r + h) - shape.eval(r - h)) / (2.0 * h);
        const double an = shape.deriv(r);
        const double scale = std::max({std::abs(fd), std::abs(an), 1e-12});
        if (std::abs(fd - an) > 1e-4 * scale && std::abs(fd - an) > 1e-10) {
            std::ostringstream os;
            os << "shape: deriv(" << r << ")=" << an
               << " disagrees with finite difference " << fd;
            out.push_back({S::Error, os.str()});
            break;
        }
    }
    // Declared tail: F(r) r^nu close to tail_limit past the onset.
    const double nu = shape.tail_nu();
    if (nu > 0.0 && std::isfinite(nu)) {
        const double r = 2.0 * shape.tail_onset();
        const double lim = shape.tail_limit();
        const double got = shape.eval(r) * std::pow(r, nu);
        if (!(lim > 0.0) || std::abs(got - lim) / lim > 0.05) {
            std::ostringstream os;
            os << "shape: F(r) r^nu = " << got << " at r=" << r
               << " does not match declared tail limit " << lim;
            out.push_back({S::Error, os.str()});
        }
    }
}

} // namespace

std::vector<Violation> validate_scenario(const NetworkScenario& s) {
    using S = Violation::Severity;
    std::vector<Violation> out;
    try {
        s.channel.check();
    } catch (const DomainError& e) {
        out.push_back({S::Error, e.what()});
    }
    if (!(s.lambda > 0.0))
        out.push_back({S::Error, "scenario: lambda must be positive"});
    check_shape_restrictions(s.shape, out);
    if (s.channel.alpha == 2 && !(s.shape.tail_nu() > 0.0))
        out.push_back({S::Error,
                       "tail condition nu>0 fails: alpha=2 requires "
                       "lim F(r) r^nu finite for some nu>0"});
    if (!(s.shape.tail_nu() > 2.0))
        out.push_back({S::Warning,
                       "AST requires nu>2; average sum throughput is undefined "
                       "for this shape"});
    return out;
}

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key, const char* ctx) {
    if (!obj.contains(key)) {
        std::ostringstream os;
        os << "scenario: missing key '" << ctx << "." << key << "'";
        throw ParseError(os.str());
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        std::ostringstream os;
        os << "scenario: key '" << ctx << "." << key << "' must be a number";
        throw ParseError(os.str());
    }
    return v.get<double>();
}

// Numbers are linear; strings with a dB suffix are converted: "-8dB" -> 10^(-0.8).
double number_or_db(const json& obj, const char* key, const char* ctx) {
    if (!obj.contains(key)) {
        std::ostringstream os;
        os << "scenario: missing key '" << ctx << "." << key << "'";
        throw ParseError(os.str());
    }
    const json& v = obj.at(key);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        size_t pos = s.find("dB");
        if (pos == std::string::npos)
            pos = s.find("db");
        if (pos != std::string::npos) {
            try {
                const double db = std::stod(s.substr(0, pos));
                return std::pow(10.0, db / 10.0);
            } catch (const std::exception&) {
            }
        }
    }
    std::ostringstream os;
    os << "scenario: key '" << ctx << "." << key
       << "' must be a number or a dB string like \"-8dB\"";
    throw ParseError(os.str());
}

ShapeFunction parse_shape(const json& shape) {
    if (!shape.contains("kind") || !shape.at("kind").is_string())
        throw ParseError("scenario: missing key 'shape.kind'");
    const std::string kind = shape.at("kind").get<std::string>();
    const json params = shape.value("params", json::object());
    if (kind == "exp_power")
        return ShapeFunction::exp_power(require_number(params, "a", "shape.params"),
                                        require_number(params, "b", "shape.params"));
    if (kind == "exponential")
        return ShapeFunction::exponential(require_number(params, "a", "shape.params"));
    if (kind == "disk")
        return ShapeFunction::disk(require_number(params, "R", "shape.params"));
    if (kind == "constant")
        return ShapeFunction::constant();
    if (kind == "power_law")
        return ShapeFunction::power_law(require_number(params, "nu", "shape.params"));
    if (kind == "hotspot")
        return ShapeFunction::hotspot(require_number(params, "r0", "shape.params"),
                                      require_number(params, "r1", "shape.params"));
    if (kind == "tabulated") {
        if (!params.contains("r") || !params.contains("F"))
            throw ParseError("scenario: tabulated shape needs 'shape.params.r' and 'shape.params.F'");
        std::vector<double> r = params.at("r").get<std::vector<double>>();
        std::vector<double> F = params.at("F").get<std::vector<double>>();
        return ShapeFunction::tabulated(
            std::move(r), std::move(F),
            params.value("tail_nu", ShapeFunction::kNuInfinity),
            require_number(params, "tail_onset", "shape.params"),
            params.value("tail_limit", 0.0));
    }
    std::ostringstream os;
    os << "scenario: unknown shape.kind '" << kind << "'";
    throw ParseError(os.str());
}

} // namespace

NetworkScenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!root.contains("shape"))
        throw ParseError("scenario: missing key 'shape'");
    if (!root.contains("channel"))
        throw ParseError("scenario: missing key 'channel'");

    NetworkScenario s;
    try {
        s.shape = parse_shape(root.at("shape"));
    } catch (const DomainError& e) {
        throw ParseError(std::string("scenario: shape.params invalid: ") + e.what());
    }
    s.lambda = require_number(root, "lambda", "");
    const json& ch = root.at("channel");
    s.channel.alpha = int(require_number(ch, "alpha", "channel"));
    s.channel.c = require_number(ch, "c", "channel");
    s.channel.d = require_number(ch, "d", "channel");
    s.channel.eta = number_or_db(ch, "eta", "channel");
    s.channel.beta = number_or_db(ch, "beta", "channel");
    try {
        s.channel.check();
    } catch (const DomainError& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    return s;
}

NetworkScenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("scenario: cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_scenario(os.str());
}

std::string scenario_digest(const NetworkScenario& s) {
    std::ostringstream canon;
    canon.precision(17);
    canon << s.shape.describe() << "|lambda=" << s.lambda
          << "|alpha=" << s.channel.alpha << "|c=" << s.channel.c
          << "|d=" << s.channel.d << "|eta=" << s.channel.eta
          << "|beta=" << s.channel.beta;
    const std::string str = canon.str();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : str) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

double eta_at_distance(const ChannelParams& ch, double dist) {
    const double dref = kEtaReferenceDistance;
    const double pa = ch.alpha == 2 ? dist * dist : dist * dist * dist * dist;
    const double pr = ch.alpha == 2 ? dref * dref : dref * dref * dref * dref;
    return ch.eta * (ch.c + pa) / (ch.c + pr);
}

} // namespace aloha
