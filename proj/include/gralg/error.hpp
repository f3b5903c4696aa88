#pragma once

#include <stdexcept>
#include <string>

namespace gralg {

enum class errc {
    division_by_zero,
    precision_error,
    reconstruction_failure,
    invalid_representation,
    shape_error,
    not_a_unit,
    not_a_complex,
    lift_obstruction,
    not_surjective,
    invalid_trivialisation,
    range_error,
    not_finer,
    presentation_mismatch,
    classification_error,
    incomplete_data,
    schema_error,
    singular_transport,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::division_by_zero: return "DivisionByZero";
        case errc::precision_error: return "PrecisionError";
        case errc::reconstruction_failure: return "ReconstructionFailure";
        case errc::invalid_representation: return "InvalidRepresentation";
        case errc::shape_error: return "ShapeError";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_a_complex: return "NotAComplex";
        case errc::lift_obstruction: return "LiftObstruction";
        case errc::not_surjective: return "NotSurjective";
        case errc::invalid_trivialisation: return "InvalidTrivialisation";
        case errc::range_error: return "RangeError";
        case errc::not_finer: return "NotFiner";
        case errc::presentation_mismatch: return "PresentationMismatch";
        case errc::classification_error: return "ClassificationError";
        case errc::incomplete_data: return "IncompleteData";
        case errc::schema_error: return "SchemaError";
        case errc::singular_transport: return "SingularTransport";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace gralg
