#pragma once

namespace modq {

/// Selects between the OpenMP kernel and its serial reference.
enum class Execution { Serial, Parallel };

}  // namespace modq
