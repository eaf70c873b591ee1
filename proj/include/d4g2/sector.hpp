#pragma once

namespace d4g2 {

// Neveu-Schwarz (half-integer modes) or Ramond (integer modes)
enum class Sector { NS, Ramond };

}  // namespace d4g2
