#pragma once

#include <stdexcept>
#include <string>

namespace entgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ENTGEO_ERROR(Name)                      \
  struct Name : Error {                         \
    using Error::Error;                         \
  }

ENTGEO_ERROR(ParseError);
ENTGEO_ERROR(DimensionError);
ENTGEO_ERROR(NormalizationError);
ENTGEO_ERROR(PartitionError);
ENTGEO_ERROR(SpectrumError);
ENTGEO_ERROR(ProjectionUndefined);
ENTGEO_ERROR(PreconditionError);
ENTGEO_ERROR(NotAChainError);
ENTGEO_ERROR(InvalidCoordSet);
ENTGEO_ERROR(GaugeDomainError);
ENTGEO_ERROR(CycleError);
ENTGEO_ERROR(UnknownElementError);
ENTGEO_ERROR(DuplicateCoverError);
ENTGEO_ERROR(NotBoundedError);
ENTGEO_ERROR(SizeLimitError);
ENTGEO_ERROR(NotALatticeError);
ENTGEO_ERROR(NotOrthocomplementationError);
ENTGEO_ERROR(NotGradedError);
ENTGEO_ERROR(IsoFailure);

#undef ENTGEO_ERROR

}  // namespace entgeo
