#ifndef SGT_REPORT_HPP_
#define SGT_REPORT_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

namespace sgt {

  //! One named pass/fail entry of a verification report.
  //!
  //! Entries that do not apply to the input (a hypothesis of the identity
  //! is not met) have `applicable == false` and count as passing.
  struct Check {
    std::string              name;
    bool                     applicable = true;
    bool                     passed     = true;
    std::string              detail;
    std::vector<std::size_t> witness;
  };

  class Report {
   public:
    Report() = default;

    Check& add(std::string name) {
      _checks.push_back(Check{std::move(name), true, true, {}, {}});
      return _checks.back();
    }

    void add(Check check) {
      _checks.push_back(std::move(check));
    }

    void not_applicable(std::string name, std::string why);

    void fail(std::string              name,
              std::string              detail,
              std::vector<std::size_t> witness = {});

    void append(Report const& other, std::string const& prefix = "");

    bool all_passed() const noexcept;

    // The named entry, or nullptr.
    Check const* find(std::string const& name) const noexcept;

    // True iff the entry exists, is applicable and passed.
    bool passed(std::string const& name) const noexcept;

    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }

    std::string to_text() const;

   private:
    std::vector<Check> _checks;
  };

}  // namespace sgt

#endif  // SGT_REPORT_HPP_
