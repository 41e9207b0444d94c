#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trigfit/samples.hpp"

namespace trigfit {

/// Built-in 2*pi periodic test signals:
///
///     f1(x) = exp(sin x)                        entire, rapidly decaying spectrum
///     f2(x) = cos(50 x + 4 sin(5 x))            frequency-modulated, even
///     f3(x) = (4/pi)|((x - pi/2) mod 2pi) - pi| - 2   triangle wave in [-2, 2]
///
/// The mod in f3 is the floor mod into [0, 2 pi), so f3 peaks at x = pi/2
/// (value 2) and bottoms at x = -pi/2 (value -2). user_csv stands for
/// samples loaded from a file and has no closed form.
enum class SignalId { f1, f2, f3, user_csv };

/// Point evaluation; throws std::invalid_argument for user_csv.
double eval_signal(SignalId id, double x);

/// The signal on the canonical N-node grid, provenance set to the signal
/// name.
SampleVector sample_signal(SignalId id, std::size_t node_count);

std::string signal_name(SignalId id);

/// Inverse of signal_name for the built-in ids; nullopt for anything else.
std::optional<SignalId> parse_signal(std::string_view name);

}  // namespace trigfit
