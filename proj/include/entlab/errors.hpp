#pragma once

#include <stdexcept>
#include <string>

namespace entlab {

// Bad arguments, dimension mismatches, domain violations. CLI maps to exit 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing/malformed/truncated files. CLI maps to exit 1.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace entlab
