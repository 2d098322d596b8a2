#pragma once

#include <stdexcept>
#include <string>

namespace mlqkit {

// Base of every error raised by the library. name() is the stable error
// identifier printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define MLQKIT_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

MLQKIT_DEFINE_ERROR(ShapeError)
MLQKIT_DEFINE_ERROR(DominanceSizeError)
MLQKIT_DEFINE_ERROR(TooFewPositionsError)
MLQKIT_DEFINE_ERROR(TooFewColumnsError)
MLQKIT_DEFINE_ERROR(IndexError)
MLQKIT_DEFINE_ERROR(NoActiveRegionError)
MLQKIT_DEFINE_ERROR(InvalidPairError)
MLQKIT_DEFINE_ERROR(ContentError)
MLQKIT_DEFINE_ERROR(SizeError)
MLQKIT_DEFINE_ERROR(FillingError)
MLQKIT_DEFINE_ERROR(NotNonwrappingError)
MLQKIT_DEFINE_ERROR(TheoremViolationError)
MLQKIT_DEFINE_ERROR(UsageError)
MLQKIT_DEFINE_ERROR(ParseError)

#undef MLQKIT_DEFINE_ERROR

}  // namespace mlqkit
