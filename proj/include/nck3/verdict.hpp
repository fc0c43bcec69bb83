#pragma once

#include <string>
#include <string_view>

namespace nck3 {

enum class Verdict { Pass, Fail, Unknown };

std::string_view to_string(Verdict v);

/// FAIL dominates UNKNOWN, which dominates PASS.
Verdict combine(Verdict a, Verdict b);

/// One evaluated condition. The witness never contains whitespace so that it
/// can be embedded in a report record.
struct ConditionResult {
    std::string name;
    Verdict verdict = Verdict::Unknown;
    std::string witness;
};

}  // namespace nck3
