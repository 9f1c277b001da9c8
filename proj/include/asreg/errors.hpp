#pragma once

#include <stdexcept>
#include <string>

namespace asreg {

// Base for all domain errors. `code()` is the stable machine-readable name
// used by the CLI's error JSON; `what()` carries the human explanation.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define ASREG_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& message)                  \
            : Error(#Name, message) {}                             \
    }

ASREG_DEFINE_ERROR(DivisionByZero);
ASREG_DEFINE_ERROR(SingularMatrix);
ASREG_DEFINE_ERROR(TorsionPoint);
ASREG_DEFINE_ERROR(SingularHesse);
ASREG_DEFINE_ERROR(CurveMismatch);
ASREG_DEFINE_ERROR(CanonicalFormRequired);
ASREG_DEFINE_ERROR(InvalidParameters);
ASREG_DEFINE_ERROR(NotOnCurve);
ASREG_DEFINE_ERROR(WrongDimension);
ASREG_DEFINE_ERROR(SamplingExhausted);

#undef ASREG_DEFINE_ERROR

}  // namespace asreg
