#ifndef TVB_CHECK_RESULT_HPP
#define TVB_CHECK_RESULT_HPP

#include <string>

namespace tvb {

/// Outcome of an independent certificate re-check; reason is empty on
/// success and names the first violated invariant otherwise.
struct CheckResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {true, {}}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

}  // namespace tvb

#endif
