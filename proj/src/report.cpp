#include "filtra/report.hpp"

#include <tuple>

namespace filtra {

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::vacuous:
        return "vacuous";
    }
    return "?";
}

CheckReport CheckReport::passed(std::string check, nlohmann::json instance)
{
    return CheckReport(std::move(check), std::move(instance), Verdict::pass);
}

CheckReport CheckReport::failed(std::string check, nlohmann::json instance, nlohmann::json witness)
{
    CheckReport r(std::move(check), std::move(instance), Verdict::fail);
    r.witness_ = std::move(witness);
    return r;
}

CheckReport CheckReport::vacuous(std::string check, nlohmann::json instance, std::string hypothesis)
{
    CheckReport r(std::move(check), std::move(instance), Verdict::vacuous);
    r.hypothesis_ = std::move(hypothesis);
    return r;
}

nlohmann::json CheckReport::to_json(bool with_timing) const
{
    nlohmann::json j;
    j["check"] = check_;
    j["instance"] = instance_;
    j["verdict"] = verdict_name(verdict_);
    if (witness_) {
        j["witness"] = *witness_;
    }
    if (verdict_ == Verdict::vacuous) {
        j["failed_hypothesis"] = hypothesis_;
    }
    if (with_timing) {
        j["elapsed_us"] = elapsed_.count();
    }
    return j;
}

bool report_order(const CheckReport& a, const CheckReport& b)
{
    return std::tie(a.order_key(), a.check()) < std::tie(b.order_key(), b.check());
}

} // namespace filtra
