#pragma once

#include <filesystem>

#include "trigfit/samples.hpp"

namespace trigfit {

/// Format a double with 17 significant digits ("%.17g"), enough for the
/// decimal text to round-trip back to the identical bits.
std::string format_double(double value);

/// Two-column (x, value) CSV with LF line endings: '#'-prefixed metadata
/// lines recording N, the provenance source, and the noise spec plus seed
/// when present, then one data row per node.
void write_samples_csv(const SampleVector& samples, const std::filesystem::path& path);

/// Read samples back. Accepts the two-column layout, with every x required
/// to match the equidistant node -pi + 2*pi*j/N within 1e-9 (N = data row
/// count; worst offender reported via GridMismatch), or a one-column
/// value-only layout placed on the canonical grid. Throws IoError when the
/// file cannot be opened and ParseError (with line number) on malformed
/// rows. The provenance source is the file path; a noise metadata line
/// written by write_samples_csv is restored if present.
SampleVector read_samples_csv(const std::filesystem::path& path);

}  // namespace trigfit
