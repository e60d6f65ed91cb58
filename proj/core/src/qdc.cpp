#include "sdc/qdc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace detail {
void require_odd_prime(int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("expected an odd prime, got " +
                                std::to_string(p));
}
}  // namespace detail

std::vector<int> quadratic_residues(int p) {
  detail::require_odd_prime(p);
  std::vector<int> qr;
  qr.reserve(size_t(p - 1) / 2);
  for (int x = 1; x <= (p - 1) / 2; ++x)
    qr.push_back(int(int64_t(x) * x % p));
  std::sort(qr.begin(), qr.end());
  qr.erase(std::unique(qr.begin(), qr.end()), qr.end());
  return qr;
}

std::vector<FamilyCode> selfdual_qdc_family(int p) {
  detail::require_odd_prime(p);
  using namespace el::f4u;
  std::vector<FamilyCode> out;
  if (p % 8 == 7) {
    out.push_back({"P" + std::to_string(p),
                   build_P<F4u>({p, u, one + w, w + uw}),
                   SelfDualType::TypeII});
    out.push_back({"B" + std::to_string(p),
                   build_B<F4u>({p, one + u + uw, w + uw, one + w},
                                {u, one + uw, one + uw}),
                   SelfDualType::TypeII});
  } else if (p % 8 == 3) {
    out.push_back({"B" + std::to_string(p) + "a",
                   build_B<F4u>({p, one, u + uw, one},
                                {u + uw, one + u + uw, one + u + uw}),
                   SelfDualType::TypeI});
    out.push_back({"B" + std::to_string(p) + "b",
                   build_B<F4u>({p, one + w, w + uw, one + w},
                                {w, one + w + uw, one + u + w}),
                   SelfDualType::TypeII});
  } else {
    throw std::invalid_argument(
        "self-dual QDC families exist for p = 3 or 7 (mod 8); got " +
        std::to_string(p));
  }
  return out;
}

}  // namespace sdc
