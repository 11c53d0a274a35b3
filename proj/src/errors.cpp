#include "fibersig/errors.hpp"

namespace fibersig {

namespace {

std::string join_violations(const std::string& context, const std::vector<std::string>& v) {
    std::string msg = context;
    for (std::size_t i = 0; i < v.size(); ++i) msg += (i == 0 ? ": " : "; ") + v[i];
    return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : ValidationError("validation failed", std::move(violations)) {}

ValidationError::ValidationError(const std::string& context, std::vector<std::string> violations)
    : std::runtime_error(join_violations(context, violations)), violations_(std::move(violations)) {}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

UnknownFiber::UnknownFiber(std::string canonical_form)
    : std::runtime_error("connected singular component matches no catalog class: " + canonical_form),
      canonical_(std::move(canonical_form)) {}

}  // namespace fibersig
