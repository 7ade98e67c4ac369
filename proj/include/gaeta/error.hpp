#pragma once

#include <stdexcept>
#include <string>

namespace gaeta {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes: usage errors are caught at parse time, UnsupportedN/UnsupportedRank
/// map to "unsupported input", everything else is a verification failure.
enum class errc {
    non_positive_rank,
    no_real_intersection,
    not_an_exceptional_pair,
    controlling_not_found,
    not_generic,
    not_pure,
    out_of_range,
    unsupported_rank,
    unsupported_n,
    internal_inconsistency,
    not_generic_matrix,
    not_a_complex,
    infeasible,
    retry_with_new_seed,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_positive_rank: return "NonPositiveRank";
    case errc::no_real_intersection: return "NoRealIntersection";
    case errc::not_an_exceptional_pair: return "NotAnExceptionalPair";
    case errc::controlling_not_found: return "ControllingNotFound";
    case errc::not_generic: return "NotGeneric";
    case errc::not_pure: return "NotPure";
    case errc::out_of_range: return "OutOfRange";
    case errc::unsupported_rank: return "UnsupportedRank";
    case errc::unsupported_n: return "UnsupportedN";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::not_generic_matrix: return "NotGenericMatrix";
    case errc::not_a_complex: return "NotAComplex";
    case errc::infeasible: return "Infeasible";
    case errc::retry_with_new_seed: return "RetryWithNewSeed";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class failure : public std::runtime_error {
public:
    failure(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw failure(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace gaeta
