// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac/bc.hpp"
#include "dirac/function.hpp"
#include "dirac/hilbert.hpp"
#include "dirac/potential.hpp"
#include "dirac/selfadjoint.hpp"
#include "dirac/transforms.hpp"

namespace dirac::io {

using json = nlohmann::json;

/// Number, [re, im] or {"re": .., "im": ..}.
cplx parse_complex(const json& j);
json to_json(cplx z);

/// {"preset": "periodic" | "antiperiodic"} or {"a": .., "b": .., "c": .., "d": ..}.
BoundaryCondition parse_bc(const json& j);

/// Function spec: {"kind": "constant" | "exponential" | "step" | "affine" | "sawtooth" |
/// "fourier" | "samples" | "sum", ...}. A bare number is a constant.
ScalarFn parse_function(const json& j);

/// {"P": fn, "Q": fn, "smoothness": "L2" | "BV" | "smooth"}; missing entries are zero.
PotentialSpec parse_potential(const json& j);

/// {"f": fn, "g": fn}.
VectorFunction parse_vector_function(const json& j);

/// {"kind": "sobolev", "alpha": a} or {"kind": "log", "delta": d}.
WeightSeq parse_weight(const json& j);

/// {"x1", "x2", "rho": fn, "T": [[fn, fn], [fn, fn]], "bc": ..}.
WeightedProblem parse_weighted_problem(const json& j);

/// Real problem for the self-adjoint pipeline; "angles": "radians" (default) or "degrees".
RealDiracProblem parse_real_problem(const json& j);
SeparatedSelfAdjointBC parse_separated_bc(const json& j);

std::vector<int> parse_int_list(const json& j);
std::vector<double> parse_double_list(const json& j);

/// 17 significant digits, lowercase scientific.
std::string fmt(double x);

/// Row-oriented CSV text with a header line.
class Csv {
public:
    explicit Csv(std::vector<std::string> header);
    Csv& row(const std::vector<std::string>& cells);
    std::string str() const { return text_; }

private:
    std::size_t cols_;
    std::string text_;
};

/// Writes to a temporary sibling and renames over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

json read_json_file(const std::filesystem::path& path);

}  // namespace dirac::io
