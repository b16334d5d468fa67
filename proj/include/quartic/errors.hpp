#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* plane graph construction */
struct InconsistentRotation : Error { using Error::Error; };
struct NotPlanar : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };

/* surgery */
struct NotCoFacial : Error { using Error::Error; };
struct PendantsAdjacent : Error { using Error::Error; };
struct NotACut : Error { using Error::Error; };

/* expansion ops */
struct PatternAbsent : Error { using Error::Error; };
struct WouldCreateParallelEdge : Error { using Error::Error; };
struct NoReduction : Error { using Error::Error; };

/* solver */
struct IsOctahedron : Error { using Error::Error; };
struct NotThreeEdgeConnected : Error { using Error::Error; };
struct NotTwoConnected : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
// Signals an implementation bug: the theory says some case always applies.
struct InternalCaseExhaustion : Error { using Error::Error; };

/* oracle */
struct BudgetExhausted : Error { using Error::Error; };

/* decomposer */
struct LengthMismatch : Error { using Error::Error; };
struct StartVertexAbsent : Error { using Error::Error; };
struct BadLengths : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

/* io */
struct FormatError : Error { using Error::Error; };

} // namespace quartic
