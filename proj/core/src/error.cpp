#include "latwalk/error.hpp"

namespace latwalk {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::empty_support: return "EmptySupport";
        case Errc::weight_sum_mismatch: return "WeightSumMismatch";
        case Errc::non_positive_weight: return "NonPositiveWeight";
        case Errc::non_positive_denominator: return "NonPositiveDenominator";
        case Errc::duplicate_atom: return "DuplicateAtom";
        case Errc::denominator_mismatch: return "DenominatorMismatch";
        case Errc::exact_cap_exceeded: return "ExactCapExceeded";
        case Errc::zero_second_moment: return "ZeroSecondMoment";
        case Errc::asymmetric_law: return "AsymmetricLaw";
        case Errc::malformed_law_file: return "MalformedLawFile";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace latwalk
