#include "upn/dipn/kernels.hpp"

namespace upn::dipn::kernels::scalar {

bool enabled(const DenseNet& net, const std::int64_t* marking, std::size_t t) {
  const std::int64_t* need = net.need_row(t);
  const std::int64_t* cap = net.cap_row(t);
  for (std::size_t p = 0; p < net.lanes; ++p)
    if (marking[p] < need[p] || marking[p] > cap[p]) return false;
  return true;
}

std::ptrdiff_t first_enabled(const DenseNet& net, const std::int64_t* marking, std::size_t from) {
  for (std::size_t t = from; t < net.transitions; ++t)
    if (enabled(net, marking, t)) return static_cast<std::ptrdiff_t>(t);
  return -1;
}

bool apply(const DenseNet& net, std::int64_t* marking, std::size_t t) {
  const std::int64_t* delta = net.delta_row(t);
  bool within = true;
  for (std::size_t p = 0; p < net.lanes; ++p) {
    marking[p] += delta[p];
    within &= marking[p] <= kLimit;
  }
  return within;
}

}  // namespace upn::dipn::kernels::scalar
