#pragma once

#include <stdexcept>
#include <string>

namespace ctrwqo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CTRWQO_DEFINE_ERROR(Name)              \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

CTRWQO_DEFINE_ERROR(MalformedGraph6);
CTRWQO_DEFINE_ERROR(TooLarge);
CTRWQO_DEFINE_ERROR(NotAnEdge);
CTRWQO_DEFINE_ERROR(OutOfRange);
CTRWQO_DEFINE_ERROR(KeyMismatch);
CTRWQO_DEFINE_ERROR(DisconnectedInput);
CTRWQO_DEFINE_ERROR(NotACycle);
CTRWQO_DEFINE_ERROR(EmptySequence);
CTRWQO_DEFINE_ERROR(BlockWithoutRoot);
CTRWQO_DEFINE_ERROR(NotCliqueCactus);
CTRWQO_DEFINE_ERROR(ParamOutOfRange);

#undef CTRWQO_DEFINE_ERROR

}  // namespace ctrwqo
