#ifndef FOURCOVER_ERRORS_HPP
#define FOURCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fourcover {

// Base class for all library errors.  `name()` is the stable identifier
// used by the CLI for exit diagnostics; `what()` carries details.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }
private:
    std::string name_;
};

#define FOURCOVER_DEFINE_ERROR(Name)                                   \
    class Name : public error {                                        \
    public:                                                            \
        explicit Name(const std::string& msg) : error(#Name, msg) {}   \
    };

FOURCOVER_DEFINE_ERROR(SyntaxError)
FOURCOVER_DEFINE_ERROR(UnknownVariable)
FOURCOVER_DEFINE_ERROR(ZeroPolynomial)
FOURCOVER_DEFINE_ERROR(NotASquare)
FOURCOVER_DEFINE_ERROR(DimensionMismatch)
FOURCOVER_DEFINE_ERROR(NotSquarefree)
FOURCOVER_DEFINE_ERROR(NotInvertible)
FOURCOVER_DEFINE_ERROR(SingularQuartic)
FOURCOVER_DEFINE_ERROR(ZeroPencil)
FOURCOVER_DEFINE_ERROR(AEZero)
FOURCOVER_DEFINE_ERROR(SingularJacobian)
FOURCOVER_DEFINE_ERROR(NormMismatch)
FOURCOVER_DEFINE_ERROR(EnumerationExhausted)
FOURCOVER_DEFINE_ERROR(EliminationRankError)
FOURCOVER_DEFINE_ERROR(TIndependenceFailure)
FOURCOVER_DEFINE_ERROR(CuspParameter)
FOURCOVER_DEFINE_ERROR(SingularFibre)
FOURCOVER_DEFINE_ERROR(NotDecomposable)
FOURCOVER_DEFINE_ERROR(NoRationalPoint)
FOURCOVER_DEFINE_ERROR(MalformedCertificate)
FOURCOVER_DEFINE_ERROR(DegenerateAlgebra)
FOURCOVER_DEFINE_ERROR(ModelFileError)

#undef FOURCOVER_DEFINE_ERROR

} // namespace fourcover

#endif
