#pragma once

namespace prodstruct {

/// Selects the serial reference kernel or its OpenMP counterpart.
/// Both produce identical results; the serial path is kept for testing.
enum class Exec { serial, parallel };

}  // namespace prodstruct
