#include "graphdiff/distance.hpp"

#include <algorithm>

namespace graphdiff {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::LinearFree: return "linear";
    case Variant::LinearFixedAlpha: return "linear-fixed";
    case Variant::TSGDD: return "tsgdd";
    case Variant::ExpFree: return "exp";
    case Variant::ExpFixedAlpha: return "exp-fixed";
    case Variant::Hammond: return "hammond";
  }
  return "unknown";
}

OrderedSpectra order_operands(const Spectrum& a, const Spectrum& b) {
  bool swap = false;
  if (a.size() != b.size()) {
    swap = a.size() > b.size();
  } else {
    const auto va = a.values();
    const auto vb = b.values();
    swap = std::lexicographical_compare(vb.begin(), vb.end(), va.begin(), va.end());
  }
  if (swap) return {&b, &a, true};
  return {&a, &b, false};
}

}  // namespace graphdiff
