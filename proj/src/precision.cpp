#include "carlson/precision.hpp"

#include <cstdlib>
#include <string>

namespace carlson {

Precision Precision::Digits(unsigned digits) {
    if (digits < kMinDigits || digits > kMaxDigits) {
        throw PrecisionError("digits must be in [17, 200], got " + std::to_string(digits));
    }
    return Precision{digits};
}

unsigned default_digits() {
    const char* env = std::getenv("CARLSON_PRECISION");
    if (env == nullptr || *env == '\0') return kDefaultDigits;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < static_cast<long>(kMinDigits) || v > static_cast<long>(kMaxWorkingDigits)) {
        throw PrecisionError("CARLSON_PRECISION must be an integer in [17, 95]");
    }
    return static_cast<unsigned>(v);
}

}  // namespace carlson
