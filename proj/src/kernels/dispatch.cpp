#include "porous/kernels.hpp"

namespace porous::kernels {
namespace {

constexpr BitRowOps kScalarOps{&scalar::rotate_or, &scalar::absorb, &scalar::intersect,
                               &scalar::any};

#ifdef POROUS_HAVE_AVX2_KERNELS
constexpr BitRowOps kAvx2Ops{&avx2::rotate_or, &avx2::absorb, &avx2::intersect, &avx2::any};
#endif

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#ifdef POROUS_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

const BitRowOps& ops(Isa isa) noexcept {
#ifdef POROUS_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return kAvx2Ops;
#endif
  (void)isa;
  return kScalarOps;
}

const BitRowOps& active_ops() noexcept {
  static const BitRowOps& selected = ops(best_isa());
  return selected;
}

}  // namespace porous::kernels
