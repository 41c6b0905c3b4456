#pragma once

/**
 * @file report.hpp
 * @brief JSON input parsing and report generation behind the command-line tool.
 *
 * Input document:
 *   {"group": [n1, ..., nt], "c": [{"exp": [a1, ..., at], "coeff": k}, ...], "name": "..."}
 * "name" is optional. Repeated exponents are summed.
 *
 * Reports use insertion-ordered JSON with canonical element order everywhere,
 * so identical requests produce byte-identical output.
 */

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pcring/examples.hpp"

namespace pcring {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    exit_success = 0,
    exit_validation_error = 1,
    exit_verification_failure = 2,
};

struct AnalysisRequest {
    InstanceDescriptor instance;
    bool verify = true;
    bool emit_idempotents = false;
    bool emit_nilradical = false;
    std::optional<std::string> output;
};

/// Error raised for malformed input; pointer() is a JSON pointer into the document.
class InputError : public Error {
public:
    InputError(ErrorKind kind, std::string pointer, const std::string& message)
        : Error(kind, message), pointer_(std::move(pointer)) {}

    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// Throws InputError on schema or canonical-element violations.
AnalysisRequest parse_input(std::string_view document);
AnalysisRequest parse_input_json(const Json& document);

struct RunResult {
    Json report;
    int exit_code = exit_success;
};

RunResult run(const AnalysisRequest& request);

/// {"error": {"kind": ..., "message": ..., "pointer": ...}}
Json error_report(const Error& error);

Json to_json(const Rational& q);
Json to_json(const CycloNum& x);
Json to_json(const IntGroupRingElem& x);
Json to_json(const CycloGroupRingElem& x);
Json to_json(const IntPair& x);
Json to_json(const CycloPair& x);
Json exponents_json(const AbelianGroup& g, std::size_t index);

} // namespace pcring
