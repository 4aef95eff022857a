#include "qcent/errors.hpp"

#include <sstream>

namespace qcent {

namespace {

std::string format_residual(const char* what, double residual) {
    std::ostringstream os;
    os.precision(6);
    os << what << " (residual " << residual << ")";
    return os.str();
}

}  // namespace

NotTracePreserving::NotTracePreserving(double residual)
    : Error(format_residual("channel is not trace preserving", residual)), residual_(residual) {}

NotCorrectable::NotCorrectable(double residual, double threshold)
    : Error(format_residual("subspace violates the Knill-Laflamme conditions", residual)),
      residual_(residual),
      threshold_(threshold) {}

}  // namespace qcent
