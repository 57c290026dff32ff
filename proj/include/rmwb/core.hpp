#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmwb {

using Elem = int;
using Bits = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

enum class ErrorKind {
  CycleDetected,
  UnknownName,
  DuplicateName,
  NotAnUpSet,
  NotALattice,
  UnknownBuiltin,
  NotResiduated,
  ConeNotBrouwerian,
  CarrierTooLarge,
  NotCovering,
  NotOdd,
  ProfileMismatch,
  Invalid,
  Parse,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NotAnUpSet: return "NotAnUpSet";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::NotResiduated: return "NotResiduated";
    case ErrorKind::ConeNotBrouwerian: return "ConeNotBrouwerian";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::ProfileMismatch: return "ProfileMismatch";
    case ErrorKind::Invalid: return "Invalid";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), message_(what) {}
  ErrorKind kind() const { return kind_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

// Carrier limit: RMWB_MAX_CARRIER if set to a value in 1..64, else 64.
inline int carrier_limit() {
  static const int limit = [] {
    const char* v = std::getenv("RMWB_MAX_CARRIER");
    if (!v) return kMaxCarrier;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || n < 1 || n > kMaxCarrier) return kMaxCarrier;
    return static_cast<int>(n);
  }();
  return limit;
}

inline void check_carrier(int n) {
  if (n > carrier_limit())
    throw Error(ErrorKind::CarrierTooLarge,
                std::to_string(n) + " elements (limit " + std::to_string(carrier_limit()) + ")");
}

// Bitset helpers. Element i of a carrier is bit i.
constexpr Bits bit(int i) { return Bits{1} << i; }
constexpr bool has(Bits s, int i) { return (s >> i) & 1u; }
constexpr Bits full_set(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }
constexpr bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }
inline int count(Bits s) { return std::popcount(s); }
inline int lowest(Bits s) { return std::countr_zero(s); }

template <class F>
void for_each_bit(Bits s, F&& f) {
  while (s) {
    int i = std::countr_zero(s);
    f(i);
    s &= s - 1;
  }
}

inline std::vector<int> members(Bits s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

// One law of a validation sweep. `witness` names the failing tuple.
struct Check {
  std::string law;
  bool ok = true;
  std::string witness;
};

class Report {
 public:
  void add(std::string law, bool ok, std::string witness = {}) {
    checks_.push_back({std::move(law), ok, std::move(witness)});
  }

  // `search` returns a witness description on failure, nullopt on success.
  template <class F>
  void law(std::string name, F&& search) {
    std::optional<std::string> w = search();
    add(std::move(name), !w.has_value(), w.value_or(""));
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) add(prefix + c.law, c.ok, c.witness);
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.ok) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.ok) return &c;
    return nullptr;
  }

  const std::vector<Check>& checks() const { return checks_; }

  std::string str() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
      os << (c.ok ? "pass  " : "FAIL  ") << c.law;
      if (!c.ok && !c.witness.empty()) os << "  [" << c.witness << "]";
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace rmwb
