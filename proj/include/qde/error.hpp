#pragma once

#include <stdexcept>
#include <string>

namespace qde {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { using Error::Error; };
class ZeroDenominator : public Error { using Error::Error; };
class PoleAtPoint : public Error { using Error::Error; };
class PoleAtCenter : public Error { using Error::Error; };
class InexactDivision : public Error { using Error::Error; };
class BoxOutsideDiagram : public Error { using Error::Error; };
class MixedEnergy : public Error { using Error::Error; };
class NotASingularRoot : public Error { using Error::Error; };
class DegenerateEigenvalue : public Error { using Error::Error; };
class ResonanceAtSpecializedParameters : public Error { using Error::Error; };
class PoleOfGamma : public Error { using Error::Error; };
class StepUnderflow : public Error { using Error::Error; };
class SingularityTooClose : public Error { using Error::Error; };
class SingularMatrix : public Error { using Error::Error; };
class FitResidualTooLarge : public Error { using Error::Error; };
class ExcludedParameter : public Error { using Error::Error; };

} // namespace qde
