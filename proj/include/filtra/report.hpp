#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace filtra {

enum class Verdict { pass, fail, vacuous };

std::string_view verdict_name(Verdict v);

/// Verdict of one theorem or lemma check on one instance.  A failing report
/// always carries a witness; a vacuous one names the hypothesis that did not
/// hold.
class CheckReport {
public:
    static CheckReport passed(std::string check, nlohmann::json instance);
    static CheckReport failed(std::string check, nlohmann::json instance, nlohmann::json witness);
    static CheckReport vacuous(std::string check, nlohmann::json instance, std::string hypothesis);

    const std::string& check() const { return check_; }
    const nlohmann::json& instance() const { return instance_; }
    Verdict verdict() const { return verdict_; }
    const std::optional<nlohmann::json>& witness() const { return witness_; }
    const std::string& hypothesis() const { return hypothesis_; }

    std::chrono::microseconds elapsed() const { return elapsed_; }
    void set_elapsed(std::chrono::microseconds e) { elapsed_ = e; }

    /// Position of the instance in a deterministic enumeration; reports are
    /// emitted sorted by (order_key, check).
    const std::vector<std::int64_t>& order_key() const { return order_key_; }
    void set_order_key(std::vector<std::int64_t> key) { order_key_ = std::move(key); }

    void add_detail(const std::string& key, nlohmann::json value) { instance_[key] = std::move(value); }

    /// Timing is omitted unless requested so that report streams are
    /// reproducible byte for byte.
    nlohmann::json to_json(bool with_timing = false) const;

private:
    CheckReport(std::string check, nlohmann::json instance, Verdict v)
        : check_(std::move(check)), instance_(std::move(instance)), verdict_(v)
    {
    }

    std::string check_;
    nlohmann::json instance_;
    Verdict verdict_;
    std::optional<nlohmann::json> witness_;
    std::string hypothesis_;
    std::chrono::microseconds elapsed_{0};
    std::vector<std::int64_t> order_key_;
};

bool report_order(const CheckReport& a, const CheckReport& b);

} // namespace filtra
