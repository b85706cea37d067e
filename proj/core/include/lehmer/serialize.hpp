#pragma once

#include <string>

#include "lehmer/ppd.hpp"
#include "lehmer/search.hpp"
#include "lehmer/verify.hpp"

namespace lehmer {

// Structured documents: JSON with a fixed field order, integers as decimal
// strings and reals rounded to 30 significant digits, so identical runs
// produce identical bytes.
std::string to_json(const ZsigmondyCertificate& cert);
std::string to_json(const PpdReport& report);
std::string to_json(const CandidateSet& set);
std::string to_json(const ConstantDerivation& derivation);
std::string to_json(const ClassificationReport& report);
std::string to_json(const CombinedReport& report);
std::string units_to_json(int norm_sign, const Rational& bound, const std::vector<QuadInt>& units);

}  // namespace lehmer
