#ifndef PUREORDER_ERRORS_HPP
#define PUREORDER_ERRORS_HPP

#include <stdexcept>

namespace pureorder {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactmath
struct FactorBudgetExceeded : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct BaseIsUnit : Error { using Error::Error; };
struct PerfectPower : Error { using Error::Error; };
struct NonMonicInput : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };

// orders
struct RankDeficient : Error { using Error::Error; };
struct MinpolyMismatch : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };

// dedekind
struct NotMonic : Error { using Error::Error; };
struct AlreadyMaximal : Error { using Error::Error; };

// radical
struct ReducibleDefiningPoly : Error { using Error::Error; };
struct DegreeNotOddPrime : Error { using Error::Error; };
struct NotWieferichCase : Error { using Error::Error; };

// wieferich_witness
struct CongruenceViolation : Error { using Error::Error; };
struct NonIntegralCharPoly : Error { using Error::Error; };
struct NotWieferich : Error { using Error::Error; };

// Cross-checks between independently derived results that must agree.
// If one of these fires the computation is wrong, not the input.
struct ConsistencyError : Error { using Error::Error; };

} // namespace pureorder

#endif
