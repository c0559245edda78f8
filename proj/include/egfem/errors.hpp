#pragma once

#include <stdexcept>
#include <string>

namespace egfem {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EGFEM_ERROR_TYPE(Name)                                                 \
    class Name : public Error {                                               \
    public:                                                                    \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}     \
    }

// mesh / file ingestion
EGFEM_ERROR_TYPE(UnsupportedFormat);
EGFEM_ERROR_TYPE(MalformedFile);
EGFEM_ERROR_TYPE(InvalidParameter);
EGFEM_ERROR_TYPE(MeshMismatch);

// tensor / linear algebra
EGFEM_ERROR_TYPE(DimensionMismatch);
EGFEM_ERROR_TYPE(ShapeMismatch);
EGFEM_ERROR_TYPE(NonFiniteValue);

// reduction
EGFEM_ERROR_TYPE(RankExceedsData);
EGFEM_ERROR_TYPE(SingularSelection);
EGFEM_ERROR_TYPE(PatternMismatch);
EGFEM_ERROR_TYPE(MissingDeim);

// solvers
EGFEM_ERROR_TYPE(NoConvergence);
EGFEM_ERROR_TYPE(SingularJacobian);
EGFEM_ERROR_TYPE(SingularMatrix);
EGFEM_ERROR_TYPE(StepFailure);

// benchmarks / driver
EGFEM_ERROR_TYPE(GradientUndefined);
EGFEM_ERROR_TYPE(SchemaViolation);
EGFEM_ERROR_TYPE(MissingPrerequisite);
EGFEM_ERROR_TYPE(IoError);

#undef EGFEM_ERROR_TYPE

} // namespace egfem
