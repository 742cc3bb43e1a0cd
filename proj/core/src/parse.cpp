#include "transmute/parse.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <vector>

namespace transmute {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real(const std::string& s, const std::string& ctx) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v))
            throw ParseError(ctx + ": bad number '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(ctx + ": bad number '" + s + "'");
    }
}

// key=value pairs plus bare flags, comma separated.
struct Args {
    std::map<std::string, double> values;
    bool clip = false;
};

Args parse_args(const std::string& body, const std::string& ctx) {
    Args args;
    if (body.empty())
        return args;
    for (const std::string& item : split(body, ',')) {
        if (item == "clip") {
            args.clip = true;
            continue;
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError(ctx + ": expected key=value, got '" + item + "'");
        args.values[item.substr(0, eq)] = parse_real(item.substr(eq + 1), ctx);
    }
    return args;
}

double require(const Args& args, const std::string& key, const std::string& ctx) {
    const auto it = args.values.find(key);
    if (it == args.values.end())
        throw ParseError(ctx + ": missing parameter '" + key + "'");
    return it->second;
}

}  // namespace

BaseDistPtr parse_base_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "uniform" && body.empty())
        return std::make_shared<UniformBase>();
    if (head == "normal" && body.empty())
        return std::make_shared<NormalBase>();
    if (head == "cauchy" && body.empty())
        return std::make_shared<CauchyBase>();
    if (head == "exp") {
        const Args args = parse_args(body, "base spec '" + spec + "'");
        if (args.clip || args.values.size() != 1)
            throw ParseError("base spec '" + spec + "': expected exp:beta=<r>");
        const double beta = require(args, "beta", "base spec '" + spec + "'");
        if (!(beta > 0.0))
            throw ParseError("base spec '" + spec + "': beta must be positive");
        return std::make_shared<ExponentialBase>(beta);
    }
    throw ParseError("unknown base spec '" + spec + "'");
}

MapSpec parse_map_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    const std::string ctx = "map spec '" + spec + "'";
    const Args args = parse_args(body, ctx);
    MapSpec out;
    if (head == "quad") {
        out.kind = MapKind::quadratic;
        out.p1 = require(args, "lambda", ctx);
        out.clip = args.clip;
        if (args.values.size() != 1)
            throw ParseError(ctx + ": expected quad:lambda=<r>[,clip]");
    } else if (head == "cubic") {
        out.kind = MapKind::symmetric_cubic;
        out.p1 = require(args, "gamma", ctx);
        if (args.clip || args.values.size() != 1)
            throw ParseError(ctx + ": expected cubic:gamma=<r>");
    } else if (head == "poly") {
        out.kind = MapKind::polynomial;
        out.p1 = require(args, "a1", ctx);
        out.p2 = require(args, "a2", ctx);
        out.clip = args.clip;
        if (args.values.size() != 2)
            throw ParseError(ctx + ": expected poly:a1=<r>,a2=<r>[,clip]");
    } else {
        throw ParseError("unknown " + ctx);
    }
    return out;
}

ValidityReport check_map(const MapSpec& spec) {
    switch (spec.kind) {
        case MapKind::quadratic:
            return spec.clip ? validate_params_clipped(-spec.p1, 0.0)
                             : validate_params(-spec.p1, 0.0);
        case MapKind::symmetric_cubic:
            return validate_params_clipped(0.0, spec.p1);
        case MapKind::polynomial:
            return spec.clip ? validate_params_clipped(spec.p1, spec.p2)
                             : validate_params(spec.p1, spec.p2);
    }
    throw std::logic_error("check_map: unhandled kind");
}

MapPtr make_map(const MapSpec& spec) {
    switch (spec.kind) {
        case MapKind::quadratic:
            return std::make_shared<QuadraticRTM>(spec.p1, spec.clip);
        case MapKind::symmetric_cubic:
            return std::make_shared<SymmetricCubicRTM>(spec.p1);
        case MapKind::polynomial:
            return std::make_shared<PolynomialRTM>(spec.p1, spec.p2, spec.clip);
    }
    throw std::logic_error("make_map: unhandled kind");
}

}  // namespace transmute
