#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cyseg {

// Error with a stable machine-parsable category; the CLI prints
// "error:<category>: <message>" and exits nonzero.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const { return category_; }

private:
    std::string category_;
};

[[noreturn]] inline void fail(const std::string& category, const std::string& message) {
    throw Error(category, message);
}

}  // namespace cyseg
