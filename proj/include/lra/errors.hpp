#pragma once

#include <stdexcept>
#include <string>

namespace lra {

// Base class for all toolkit errors. The CLI maps these to exit code 1 and
// prints one machine-readable line: "ERROR <name>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define LRA_DEFINE_ERROR(NAME)                                 \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
  }

LRA_DEFINE_ERROR(UnknownDataset);
LRA_DEFINE_ERROR(UnknownSplit);
LRA_DEFINE_ERROR(MissingData);
LRA_DEFINE_ERROR(InsufficientPool);
LRA_DEFINE_ERROR(NotEnoughCorrect);
LRA_DEFINE_ERROR(ShapeMismatch);
LRA_DEFINE_ERROR(DivergedTraining);
LRA_DEFINE_ERROR(TooLarge);
LRA_DEFINE_ERROR(WrongOracleMode);
LRA_DEFINE_ERROR(DegenerateMargin);
LRA_DEFINE_ERROR(NonFinite);
LRA_DEFINE_ERROR(EmptyInput);
LRA_DEFINE_ERROR(UnknownLayer);
LRA_DEFINE_ERROR(NonConvModel);
LRA_DEFINE_ERROR(DuplicateId);
LRA_DEFINE_ERROR(UnknownExplainer);
LRA_DEFINE_ERROR(ZeroDirection);
LRA_DEFINE_ERROR(RankDeficient);
LRA_DEFINE_ERROR(InitFailure);
LRA_DEFINE_ERROR(UnknownAttack);
LRA_DEFINE_ERROR(EmptyResult);
LRA_DEFINE_ERROR(NoSuccessAtHi);
LRA_DEFINE_ERROR(IoError);
LRA_DEFINE_ERROR(ConfigInvalid);
LRA_DEFINE_ERROR(UnknownCommand);

#undef LRA_DEFINE_ERROR

}  // namespace lra
