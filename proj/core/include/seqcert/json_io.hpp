#pragma once

#include "seqcert/certify.hpp"
#include "seqcert/gamma_mono.hpp"
#include "seqcert/log_behavior.hpp"
#include "seqcert/positivity.hpp"
#include "seqcert/sequence.hpp"

#include <nlohmann/json.hpp>

namespace seqcert {

nlohmann::json to_json(const BigRat& r);
nlohmann::json to_json(const RatFunc& r);
nlohmann::json to_json(const CheckOutcome& oc);
nlohmann::json to_json(const PositivityVerdict& v);
nlohmann::json to_json(const CertificateReport& rep);
nlohmann::json to_json(const EligibilityResult& res);
nlohmann::json to_json(const EBoundResult& res);
nlohmann::json to_json(const HKernelGridReport& rep);
nlohmann::json to_json(const SequenceDef& def);

/// Sequence-definition document:
/// {"name", "kind": "recurrence"|"gamma-quotient"|"explicit", "a": {"num":
/// [...], "den": [...]}, "b": {...}, "initial": ["1","0"], "offset": 0,
/// "oeis_id": "A000166"} with integer coefficients as decimal strings,
/// ascending degree.
SequenceDef sequence_def_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

/// Certificate document: {"sequence": <catalog name or inline def>,
/// "theorem": "plus"|"minus", "lambda" | "r"/"s": ratfunc, "N": int,
/// "base_window": int}.
Certificate certificate_from_json(const nlohmann::json& j);

} // namespace seqcert
