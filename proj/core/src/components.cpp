#include "defectforms/components.hpp"

#include <algorithm>

namespace defectforms {
namespace {

// sign of sorting idx (distinct entries), 0 when an entry repeats
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign;
}

IndexMask mask_of(const std::vector<int>& idx) {
  IndexMask m = 0;
  for (int i : idx) m |= 1u << i;
  return m;
}

}  // namespace

TensorForm frame_components(const TensorForm& a, const Coframe& frame) {
  TensorForm f = change_basis(a, frame, Direction::ToFrame);
  int p = a.degree();
  TensorForm c(0, a.upper(), a.lower() + p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<int> idx = c.indices(i);
    std::vector<int> head(idx.begin(), idx.end() - p), form(idx.end() - p, idx.end());
    int s = sort_sign(form);
    if (s == 0) continue;
    const ScalarField& v = f.at(head).at(mask_of(form));
    c[i] = Form(s > 0 ? v : -v);
  }
  return c;
}

TensorForm from_frame_components(const TensorForm& c, int degree, const Coframe& frame) {
  TensorForm f(degree, c.upper(), c.lower() - degree, Basis::Frame);
  int fact = degree == 3 ? 6 : degree == 2 ? 2 : 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ScalarField& v = c[i][0];
    if (v.is_exactly_zero()) continue;
    std::vector<int> idx = c.indices(i);
    std::vector<int> head(idx.begin(), idx.end() - degree), form(idx.end() - degree, idx.end());
    int s = sort_sign(form);
    if (s == 0) continue;
    f.at(head).at(mask_of(form)) += (s > 0 ? v : -v) * Rational(1, fact);
  }
  return change_basis(f, frame, Direction::ToCoordinate);
}

FrameDuals::FrameDuals(const Coframe& frame) {
  for (int a = 0; a < 3; ++a) e[a] = frame.e(a);
  vol = wedge(wedge(e[0], e[1]), e[2]);
  for (int a = 0; a < 3; ++a) {
    star1[a] = hodge(e[a], frame);
    for (int b = 0; b < 3; ++b) star2[a][b] = a == b ? Form(1) : hodge(wedge(e[a], e[b]), frame);
  }
}

}  // namespace defectforms
