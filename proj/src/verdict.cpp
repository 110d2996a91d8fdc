#include "colombeau/verdict.hpp"

namespace colombeau {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::RefutedWithWitness:
      return "RefutedWithWitness";
    case VerdictKind::SupportedUpTo:
      return "SupportedUpTo";
    case VerdictKind::Inconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

}  // namespace colombeau
