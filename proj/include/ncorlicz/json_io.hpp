#pragma once

// JSON descriptors for the public file formats:
//   Orlicz function: {"family":"power","alpha":2.0} | {"family":"expm"}
//     | {"family":"linlog"} | {"family":"table","u":[...],"phi":[...]}
//     | {"family":"intermediate","phi1":{...},"phi2":{...},"s":0.5}
//   Operator: {"algebra":{"blocks":[{"dim":2,"trace_scale":1.0}]},
//              "entries":[ block -> row -> column -> [re, im] ]}
//   TupleSpace: {"components":[{"phi":{...},"algebra":{...}},...],
//                "weights":[...], "p":2.0|"inf", "gauge":"luxemburg"}
//   TupleLinearOperator: {"coeffs":[[{"re":1,"im":0},...],...],
//                         "left":null|[[op|null,...],...], "right":...}

#include <json.hpp>

#include "ncorlicz/direct_sum.hpp"
#include "ncorlicz/interpolation.hpp"
#include "ncorlicz/orlicz_function.hpp"
#include "ncorlicz/tracial_algebra.hpp"

namespace nco {

OrliczFunction phi_from_json(const nlohmann::json& j);

TracialAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const TracialAlgebra& algebra);

Operator operator_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const Operator& op);

TupleSpace tuple_space_from_json(const nlohmann::json& j);

TupleLinearOperator tuple_linear_operator_from_json(const nlohmann::json& j);
nlohmann::json tuple_linear_operator_to_json(const TupleLinearOperator& t);

}  // namespace nco
