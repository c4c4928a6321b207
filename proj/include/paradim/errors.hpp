#pragma once

#include <stdexcept>
#include <string>

namespace paradim {

// Base of every library error; kind() names the violated contract.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PARADIM_ERROR(Name)                                             \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

PARADIM_ERROR(NonPolynomial)
PARADIM_ERROR(MixedRadicand)
PARADIM_ERROR(DSquare)
PARADIM_ERROR(NotSquarefree)
PARADIM_ERROR(UnsupportedPrime)
PARADIM_ERROR(BadIndex)
PARADIM_ERROR(BadWeight)
PARADIM_ERROR(IrrationalResidue)
PARADIM_ERROR(OddWeight)
PARADIM_ERROR(ParityFailure)
PARADIM_ERROR(BadYoung)
PARADIM_ERROR(NonIntegral)
PARADIM_ERROR(UnsupportedJ)
PARADIM_ERROR(MissingData)
PARADIM_ERROR(NegativeDim)
PARADIM_ERROR(MissingJacobiData)
PARADIM_ERROR(BiasViolation)
PARADIM_ERROR(NotSimilitude)
PARADIM_ERROR(FamilySizeMismatch)
PARADIM_ERROR(DataError)

#undef PARADIM_ERROR

}  // namespace paradim
