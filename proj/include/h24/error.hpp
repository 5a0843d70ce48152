#pragma once

#include <stdexcept>
#include <string>

namespace h24 {

// Error codes for contract violations across the library.
enum class Err {
    ZeroVector,
    NotProperPoint,
    IdealPole,
    DegeneratePole,
    DegenerateLine,
    LineOutsideModel,
    CenterNotIdeal,
    PointNotInterior,
    EndpointInsideHoroball,
    CommonCenter,
    NegativeChord,
    BadDimension,
    NonpositiveDistance,
    AngleOutOfRange,
    SameIndex,
    BadIndex,
    NotAFacet,
    NotAnEdge,
    DomainExceeded,
    MaxVolumeExceeded,
    ConeDegenerate,
    UnknownFamily,
    BadConfig,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace h24
