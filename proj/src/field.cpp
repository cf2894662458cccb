#include "assocloc/field.hpp"

#include <string>

#include "assocloc/error.hpp"

namespace assocloc {

namespace {

constexpr std::string_view kCodeNames[] = {
    "Shape",
    "NotPrime",
    "Parse",
    "NonAssociative",
    "BadUnit",
    "NotAnIdeal",
    "UnitInIdeal",
    "RelationViolated",
    "UnitNotIdentity",
    "ZeroModule",
    "NotAUnit",
    "MeataxeInconclusive",
    "NonSimpleSummand",
    "ZeroDivisorFound",
    "KernelNotContained",
    "DenominatorNotUnit",
    "NotWellDefined",
    "LayoutMismatch",
    "NotCommutative",
    "NotMaximal",
    "PullbackMismatch",
    "InvalidArgument",
};

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  return kCodeNames[static_cast<std::size_t>(code)];
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::string> details)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      details_(std::move(details)) {}

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  // Products are formed in 64 bits; keep p below 2^31 so sums never wrap.
  if (p >= (1u << 31)) throw Error(ErrorCode::NotPrime, "modulus too large");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(ErrorCode::NotAUnit, "zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace assocloc
