#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fibersig {

// Exit-code mapping used by the CLI: ValidationError/ParseError/DomainError -> 1,
// InconsistencyError -> 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    ValidationError(const std::string& context, std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A connected singular component that matches no catalog graph.
class UnknownFiber : public std::runtime_error {
public:
    explicit UnknownFiber(std::string canonical_form);
    const std::string& canonical_form() const noexcept { return canonical_; }

private:
    std::string canonical_;
};

}  // namespace fibersig
