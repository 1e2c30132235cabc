// SPDX-License-Identifier: Apache-2.0
#include "dirac/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac::io {

namespace {

const json& require(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(std::string(where) + ": missing field \"" + key + "\"");
    return j.at(key);
}

double get_double(const json& j, const char* key, double def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number()) throw ConfigError(std::string("field \"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

}  // namespace

cplx parse_complex(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && (j.contains("re") || j.contains("im")))
        return {get_double(j, "re", 0.0), get_double(j, "im", 0.0)};
    throw ConfigError("expected a complex number: number, [re, im] or {\"re\", \"im\"}, got " + j.dump());
}

json to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

BoundaryCondition parse_bc(const json& j) {
    if (j.is_string() || (j.is_object() && j.contains("preset"))) {
        const std::string p = j.is_string() ? j.get<std::string>() : j.at("preset").get<std::string>();
        if (p == "periodic" || p == "per+") return BoundaryCondition::periodic();
        if (p == "antiperiodic" || p == "per-") return BoundaryCondition::antiperiodic();
        throw ConfigError("unknown bc preset \"" + p + "\"");
    }
    if (!j.is_object()) throw ConfigError("bc must be an object");
    for (const char* k : {"a", "b", "c", "d"})
        if (!j.contains(k)) throw ConfigError(std::string("bc: missing coefficient \"") + k + "\"");
    return {parse_complex(j.at("a")), parse_complex(j.at("b")), parse_complex(j.at("c")), parse_complex(j.at("d"))};
}

ScalarFn parse_function(const json& j) {
    if (j.is_number() || j.is_array()) return ScalarFn::constant(parse_complex(j));
    if (!j.is_object()) throw ConfigError("function spec must be an object or a constant");
    const std::string kind = require(j, "kind", "function").get<std::string>();
    if (kind == "constant") return ScalarFn::constant(parse_complex(require(j, "value", "constant")));
    if (kind == "exponential")
        return ScalarFn::exponential(parse_complex(require(j, "amp", "exponential")),
                                     require(j, "freq", "exponential").get<double>());
    if (kind == "step")
        return ScalarFn::step(require(j, "x0", "step").get<double>(), parse_complex(require(j, "left", "step")),
                              parse_complex(require(j, "right", "step")));
    if (kind == "affine")
        return ScalarFn::affine(parse_complex(require(j, "c0", "affine")), parse_complex(require(j, "c1", "affine")));
    if (kind == "sawtooth") return ScalarFn::sawtooth(parse_complex(require(j, "amp", "sawtooth")));
    if (kind == "fourier") {
        // Trigonometric polynomial sum c_k e^{ikx}; "coeffs": [[k, re, im], ...].
        ScalarFn acc = ScalarFn::constant(0.0);
        for (const auto& t : require(j, "coeffs", "fourier")) {
            if (!t.is_array() || t.size() < 2) throw ConfigError("fourier: entries are [k, re, im]");
            const double k = t[0].get<double>();
            const cplx c(t[1].get<double>(), t.size() > 2 ? t[2].get<double>() : 0.0);
            acc = acc + ScalarFn::exponential(c, k);
        }
        return acc;
    }
    if (kind == "samples") {
        const auto xs = parse_double_list(require(j, "x", "samples"));
        std::vector<cplx> ys;
        for (const auto& y : require(j, "y", "samples")) ys.push_back(parse_complex(y));
        if (xs.size() != ys.size() || xs.size() < 2) throw ConfigError("samples: x and y need equal length >= 2");
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (!(xs[i] > xs[i - 1])) throw ConfigError("samples: x must be strictly increasing");
        return ScalarFn::samples(xs, ys);
    }
    if (kind == "sum") {
        ScalarFn acc = ScalarFn::constant(0.0);
        for (const auto& t : require(j, "terms", "sum")) acc = acc + parse_function(t);
        return acc;
    }
    throw ConfigError("unknown function kind \"" + kind + "\"");
}

PotentialSpec parse_potential(const json& j) {
    PotentialSpec v = PotentialSpec::zero();
    if (j.is_null()) return v;
    if (!j.is_object()) throw ConfigError("potential must be an object");
    if (j.contains("P")) v.P = parse_function(j.at("P"));
    if (j.contains("Q")) v.Q = parse_function(j.at("Q"));
    const std::string s = j.value("smoothness", "L2");
    if (s == "L2") v.smoothness = Smoothness::L2;
    else if (s == "BV") v.smoothness = Smoothness::BV;
    else if (s == "smooth") v.smoothness = Smoothness::Smooth;
    else throw ConfigError("potential: unknown smoothness \"" + s + "\"");
    return v;
}

VectorFunction parse_vector_function(const json& j) {
    return {parse_function(require(j, "f", "vector function")), parse_function(require(j, "g", "vector function"))};
}

WeightSeq parse_weight(const json& j) {
    const std::string kind = require(j, "kind", "weight").get<std::string>();
    if (kind == "sobolev") {
        const double a = require(j, "alpha", "weight").get<double>();
        if (a < 0) throw ConfigError("weight: alpha must be nonnegative");
        return WeightSeq::sobolev(a);
    }
    if (kind == "log") {
        const double d = require(j, "delta", "weight").get<double>();
        if (d < 0) throw ConfigError("weight: delta must be nonnegative");
        return WeightSeq::log(d);
    }
    throw ConfigError("unknown weight kind \"" + kind + "\"");
}

namespace {

Matrix2Fn parse_matrix(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
        throw ConfigError("T must be a 2x2 array of function specs");
    Matrix2Fn T;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) T[r][c] = parse_function(j[r][c]);
    return T;
}

std::function<double(double)> parse_rho(const json& j) {
    if (j.is_null()) return [](double) { return 1.0; };
    const ScalarFn f = parse_function(j);
    return [f](double x) { return f(x).real(); };
}

std::vector<double> interval_breakpoints(const Matrix2Fn& T, const json& j) {
    std::vector<std::vector<double>> sets;
    for (const auto& row : T)
        for (const auto& f : row) sets.push_back(f.breakpoints());
    if (j.contains("rho_breakpoints")) sets.push_back(parse_double_list(j.at("rho_breakpoints")));
    return merge_breakpoints(sets, get_double(j, "x1", 0.0), get_double(j, "x2", kPi));
}

}  // namespace

WeightedProblem parse_weighted_problem(const json& j) {
    WeightedProblem p;
    p.x1 = get_double(j, "x1", 0.0);
    p.x2 = get_double(j, "x2", kPi);
    if (!(p.x2 > p.x1)) throw ConfigError("weighted problem: x2 must exceed x1");
    p.rho = parse_rho(j.value("rho", json()));
    p.T = parse_matrix(require(j, "T", "weighted problem"));
    p.bc = parse_bc(require(j, "bc", "weighted problem"));
    p.breakpoints = interval_breakpoints(p.T, j);
    return p;
}

RealDiracProblem parse_real_problem(const json& j) {
    RealDiracProblem p;
    p.x1 = get_double(j, "x1", 0.0);
    p.x2 = get_double(j, "x2", kPi);
    if (!(p.x2 > p.x1)) throw ConfigError("self-adjoint problem: x2 must exceed x1");
    p.rho = parse_rho(j.value("rho", json()));
    if (j.contains("T")) {
        p.T = parse_matrix(j.at("T"));
    } else {
        for (auto& row : p.T)
            for (auto& f : row) f = ScalarFn::constant(0.0);
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i <= 16; ++i) {
                const double x = p.x1 + (p.x2 - p.x1) * i / 16.0;
                if (std::abs(p.T[r][c](x).imag()) > 1e-14 * (1.0 + std::abs(p.T[r][c](x))))
                    throw ConfigError("self-adjoint problem: T entries must be real-valued");
            }
    p.breakpoints = interval_breakpoints(p.T, j);
    return p;
}

SeparatedSelfAdjointBC parse_separated_bc(const json& j) {
    const std::string unit = j.value("angles", "radians");
    double scale = 1.0;
    if (unit == "degrees") scale = kPi / 180.0;
    else if (unit != "radians") throw ConfigError("angles must be \"radians\" or \"degrees\"");
    SeparatedSelfAdjointBC bc{require(j, "alpha1", "self-adjoint bc").get<double>() * scale,
                              require(j, "alpha2", "self-adjoint bc").get<double>() * scale};
    for (double a : {bc.alpha1, bc.alpha2})
        if (a < 0.0 || a >= kPi) throw ConfigError("self-adjoint bc: angles must lie in [0, pi)");
    if (bc.alpha1 == bc.alpha2) throw ConfigError("self-adjoint bc: alpha1 must differ from alpha2");
    return bc;
}

std::vector<int> parse_int_list(const json& j) {
    if (!j.is_array()) throw ConfigError("expected an integer list");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ConfigError("expected an integer list");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<double> parse_double_list(const json& j) {
    if (!j.is_array()) throw ConfigError("expected a number list");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw ConfigError("expected a number list");
        out.push_back(v.get<double>());
    }
    return out;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

Csv::Csv(std::vector<std::string> header) : cols_(header.size()) { row(header); }

Csv& Csv::row(const std::vector<std::string>& cells) {
    if (cells.size() != cols_) throw std::logic_error("Csv: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) text_ += ',';
        text_ += cells[i];
    }
    text_ += '\n';
    return *this;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot write " + tmp.string());
        os << content;
        if (!os.flush()) throw ConfigError("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config " + path.string());
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
}

}  // namespace dirac::io
