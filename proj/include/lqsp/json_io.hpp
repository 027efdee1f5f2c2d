#pragma once

#include <string>

#include "lqsp/complete.hpp"
#include "lqsp/decompose.hpp"
#include "lqsp/fejer.hpp"
#include "lqsp/laurent.hpp"
#include "lqsp/runconfig.hpp"
#include "lqsp/targets.hpp"
#include "lqsp/verify.hpp"

#include <json.hpp>

namespace lqsp {

using json = nlohmann::ordered_json;

// Keys keep insertion order (ordered_json) and the writer prints every
// binary64 as its shortest decimal that parses back to the identical value,
// so serializing the same data twice gives byte-identical files.

// {"kind":"laurent","degree":n,"coeffs":[[re,im],...]} with coefficients
// ordered k = -n..n.
json laurent_to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const json& j);

// {"A":<laurent>,"B":<laurent>,"meta":{...all TargetMeta fields...}}
json target_pair_to_json(const TargetPair& pair);
TargetPair target_pair_from_json(const json& j);

// {"iterations":k,"residual_linf":r,"converged":b,"residual_history":[...]}
json wilson_report_to_json(const WilsonReport& rep);
WilsonReport wilson_report_from_json(const json& j);

// {"A":...,"B":...,"C":...,"D":...,"report":{...}}
json quadruple_to_json(const CompletedQuadruple& q);
CompletedQuadruple quadruple_from_json(const json& j);

// {"E0":[[re,im] x4 row-major],"projectors":[[[re,im],[re,im]],...],
//  "truncation_error":x,"source_degree":n}
json sequence_to_json(const QspSequence& seq);
QspSequence sequence_from_json(const json& j);

// {"gates":[ 2x2 matrices ]} in interleaved export order.
json gates_to_json(const QspSequence& seq);

json verification_to_json(const VerificationReport& rep);
VerificationReport verification_from_json(const json& j);

json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const json& j);

// File transport. save_json stamps the RunConfig under "run_config" so every
// artifact records how it was produced; load_json strips nothing, callers
// index the fields they need.
void save_json(const std::string& path, const json& payload,
               const RunConfig& cfg);
json load_json(const std::string& path);

}  // namespace lqsp
