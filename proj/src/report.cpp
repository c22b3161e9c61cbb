#include "psq/verifier.hpp"

namespace psq {

void VerificationReport::fail(std::string_view check, nlohmann::ordered_json counterexample)
{
    passed = false;
    nlohmann::ordered_json entry;
    entry["check"] = std::string(check);
    entry["counterexample"] = std::move(counterexample);
    evidence["failures"].push_back(std::move(entry));
}

void VerificationReport::require(bool ok, std::string_view check,
                                 nlohmann::ordered_json counterexample)
{
    if (!ok)
        fail(check, std::move(counterexample));
}

void VerificationReport::absorb(const std::string& key, const VerificationReport& sub)
{
    nlohmann::ordered_json j;
    j["claim_id"] = sub.claim_id;
    j["passed"] = sub.passed;
    j["parameters"] = sub.parameters;
    j["evidence"] = sub.evidence;
    evidence[key] = std::move(j);
    if (!sub.passed)
        passed = false;
}

std::string VerificationReport::json(int indent) const
{
    nlohmann::ordered_json j;
    j["claim_id"] = claim_id;
    j["passed"] = passed;
    j["parameters"] = parameters;
    j["evidence"] = evidence;
    return j.dump(indent);
}

} // namespace psq
