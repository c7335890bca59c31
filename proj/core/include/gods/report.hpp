#pragma once

#include <string>

#include "gods/impossibility.hpp"
#include "gods/verifier.hpp"

namespace gods {

/// JSON renderings are canonical: keys sorted, two-space indent, no
/// timestamps, trailing newline. Parsing and re-dumping reproduces the bytes.
std::string worlds_to_json();
std::string worlds_to_text();

std::string classes_to_json(int depth);
std::string classes_to_text(int depth);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

std::string certificate_to_json(const TheoremCertificate& cert);
std::string certificate_to_text(const TheoremCertificate& cert);

}  // namespace gods
