#pragma once

#include <stdexcept>
#include <string>

namespace lmisyn {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// linalg
struct SingularMatrix : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct SpectraOverlap : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// state space
struct NearPole : Error { using Error::Error; };
struct FeedthroughSingular : Error { using Error::Error; };
struct NotStrictlyProper : Error { using Error::Error; };
struct Unstable : Error { using Error::Error; };

// coprime
struct Uncontrollable : Error { using Error::Error; };
struct Undetectable : Error { using Error::Error; };
struct PlacementFailed : Error { using Error::Error; };
struct GainNotStabilizing : Error { using Error::Error; };

// lmi assembly
struct PartitionMismatch : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };

// sdp solver
struct NumericalBreakdown : Error { using Error::Error; };

// synthesis
struct ZSingular : Error { using Error::Error; };
struct RecoveredUnstable : Error { using Error::Error; };
struct DXSingular : Error { using Error::Error; };
struct LmiInfeasible : Error { using Error::Error; };
struct CertificationFailed : Error { using Error::Error; };
struct ResidualNotCertified : Error { using Error::Error; };

} // namespace lmisyn
