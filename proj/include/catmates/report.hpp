#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace catmates {

struct Violation {
  std::string law;
  std::string witness;
};

// Result of an exhaustive law check. The first kMaxStored violations, and the
// first violation of every further law, keep their witness text; total()
// still counts all of them.
class Report {
 public:
  static constexpr std::size_t kMaxStored = 200;

  void fail(std::string law, std::string witness);
  void pass(std::size_t instances = 1) { checked_ += instances; }
  // Counts the instance and records a violation when cond is false.
  bool expect(bool cond, std::string_view law, const std::string& witness);
  // As above, building the witness only on failure.
  template <std::invocable F>
  bool expect(bool cond, std::string_view law, F&& witness) {
    if (cond) {
      pass();
      return true;
    }
    fail(std::string(law), witness());
    return false;
  }

  void merge(const Report& other, std::string_view prefix = {});

  bool ok() const { return failures_ == 0; }
  std::size_t checked() const { return checked_; }
  std::size_t total() const { return failures_; }
  const std::vector<Violation>& violations() const { return stored_; }
  bool has_law(std::string_view law) const;

  std::string summary() const;

 private:
  std::vector<Violation> stored_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
};

}  // namespace catmates
