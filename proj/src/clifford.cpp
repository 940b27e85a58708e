#include "cliffgen/clifford.hpp"

namespace cliffgen {

void check_dimension(int m) {
  if (m < 1 || m > kMaxDimension) {
    throw PreconditionError("dimension m must lie in [1, " + std::to_string(kMaxDimension) +
                            "], got " + std::to_string(m));
  }
}

BladeMask::BladeMask(std::uint32_t bits_, int m_) : bits(bits_), m(m_) {
  check_dimension(m);
  if (bits >> m) throw PreconditionError("blade mask has bits beyond dimension");
}

BladeMask BladeMask::generator(int j, int m) {
  if (j < 1 || j > m) throw PreconditionError("generator index out of range");
  return BladeMask(std::uint32_t{1} << (j - 1), m);
}

BladeProduct blade_product(const BladeMask& a, const BladeMask& b) {
  if (a.m != b.m) throw PreconditionError("blade dimension mismatch");
  return {blade_sign(a.bits, b.bits), BladeMask(a.bits ^ b.bits, a.m)};
}

std::string blade_name(std::uint32_t bits) {
  if (bits == 0) return "1";
  std::string out = "e";
  for (int j = 1; bits != 0; ++j, bits >>= 1) {
    if (!(bits & 1u)) continue;
    if (j < 10) {
      out += static_cast<char>('0' + j);
    } else {
      out += "[" + std::to_string(j) + "]";
    }
  }
  return out;
}

}  // namespace cliffgen
