#pragma once
#include <functional>
#include <string>

namespace symcubic {

// Invariant battery over every module; calls report(name) after each passing
// block and throws std::runtime_error at the first violation.
void selftest(const std::function<void(const std::string&)>& report);

} // namespace symcubic
