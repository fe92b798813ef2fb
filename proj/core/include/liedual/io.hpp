#pragma once

#include <json.hpp>
#include <string>

#include "liedual/dual_bracket.hpp"

namespace liedual::io {

using nlohmann::json;

// elements: {"domain": "poly"|"laurent", "coeffs": {"<exp>": "p/q", ...},
//            "central": "p/q"}
json element_to_json(const LieElement& a);
LieElement element_from_json(const json& j);

// tensors: {"kind": ..., "terms": [{"labels": ["1","c"], "coeff": "1/2"}]}
json tensor_to_json(const Tensor2& t);
json tensor_to_json(const Tensor3& t);
Tensor2 tensor2_from_json(const json& j);
Tensor3 tensor3_from_json(const json& j);

// dual elements: {"domain": ..., "rep": {"type": "finite", "coeffs": {...}}
//                | {"type": "recursive", "order": r, "h": [...],
//                   "anchor": s, "seeds": [...]}}
json dual_to_json(const DualElement& f);
DualElement dual_from_json(const json& j);

// {"n": int, "ell": "p/q", "k": "p/q"}
json params_to_json(const BialgebraParams& p);
BialgebraParams params_from_json(const json& j);

json table_to_json(const BracketTable& t);
BracketTable table_from_json(const json& j);

/// "3*e^-1 + 2*e^4" for finite-support dual elements; "0" when empty.
std::string dual_finite_str(const DualElement& f);

/// CSV with an i,j,value header, rows sorted by (i, j).
std::string table_to_csv(const BracketTable& t);

/// LaTeX tabular of the same data.
std::string table_to_latex(const BracketTable& t);

json decompose_result_to_json(const DecomposeResult& r);

}  // namespace liedual::io
