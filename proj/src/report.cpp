#include "sgt/report.hpp"

#include <sstream>  // for ostringstream

namespace sgt {

  void Report::not_applicable(std::string name, std::string why) {
    _checks.push_back(Check{std::move(name), false, true, std::move(why), {}});
  }

  void Report::fail(std::string              name,
                    std::string              detail,
                    std::vector<std::size_t> witness) {
    _checks.push_back(Check{
        std::move(name), true, false, std::move(detail), std::move(witness)});
  }

  void Report::append(Report const& other, std::string const& prefix) {
    for (auto c : other._checks) {
      c.name = prefix + c.name;
      _checks.push_back(std::move(c));
    }
  }

  bool Report::all_passed() const noexcept {
    for (auto const& c : _checks) {
      if (c.applicable && !c.passed) {
        return false;
      }
    }
    return true;
  }

  Check const* Report::find(std::string const& name) const noexcept {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  bool Report::passed(std::string const& name) const noexcept {
    auto const* c = find(name);
    return c != nullptr && c->applicable && c->passed;
  }

  std::string Report::to_text() const {
    std::ostringstream os;
    for (auto const& c : _checks) {
      os << (!c.applicable ? "  n/a " : (c.passed ? "  pass " : "  FAIL "))
         << c.name;
      if (!c.detail.empty()) {
        os << "  (" << c.detail << ")";
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace sgt
