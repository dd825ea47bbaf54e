#include "modc/selector.hpp"

#include <utility>

namespace modc {

SelectionReport selection_report(const Delta02Set& a) {
  SelectionReport report{decompose(a), {}, Delta02Set::constant(false)};
  report.kernels.reserve(report.chain.rank());
  for (const auto& [f, h] : report.chain.pairs()) {
    report.kernels.emplace_back(perfect_kernel(f), perfect_kernel(h));
  }
  for (const auto& [kf, kh] : report.kernels) {
    report.selected = combine(SetOp::Union, report.selected,
                              combine(SetOp::Difference, lift(kf), lift(kh)));
  }
  return report;
}

Delta02Set select_representative(const Delta02Set& a) {
  return selection_report(a).selected;
}

}  // namespace modc
