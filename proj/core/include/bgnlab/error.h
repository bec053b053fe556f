#ifndef BGNLAB_ERROR_H_
#define BGNLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgnlab {

enum class ErrorCode {
  kInvalidArgument,
  kParamGeneration,
  kOffCurve,
  kHashExhausted,
  kOutOfRange,
  kIncompletePeriod,
  kEncryptOnce,
  kLevelMismatch,
  kQueryDiscipline,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bgnlab

#endif  // BGNLAB_ERROR_H_
