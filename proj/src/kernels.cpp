#include "meanineq/kernels.hpp"

#include <string>

#include "meanineq/errors.hpp"

namespace meanineq::simd {

std::string_view target_name(Target t) noexcept {
  switch (t) {
    case Target::kScalar:
      return "scalar";
    case Target::kAvx2:
      return "avx2";
    case Target::kNeon:
      return "neon";
  }
  return "unknown";
}

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* lookup(Target t) noexcept {
  switch (t) {
    case Target::kScalar:
      return &scalar_kernels();
    case Target::kAvx2:
      return cpu_has_avx2() ? detail::avx2_table() : nullptr;
    case Target::kNeon:
      return detail::neon_table();
  }
  return nullptr;
}

const KernelTable& select_best() noexcept {
  if (const KernelTable* t = lookup(Target::kAvx2)) return *t;
  if (const KernelTable* t = detail::neon_table()) return *t;
  return scalar_kernels();
}

}  // namespace

bool target_available(Target t) noexcept { return lookup(t) != nullptr; }

const KernelTable& kernels_for(Target t) {
  const KernelTable* table = lookup(t);
  if (table == nullptr) throw UsageError("SIMD target unavailable: " + std::string(target_name(t)));
  return *table;
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select_best();
  return table;
}

}  // namespace meanineq::simd
