#include "quadpencil/forms.hpp"

#include <string>

namespace qp {

std::pair<int, int> signature(const RatMatrix& gram) {
  auto d = diagonalize(RationalField{}, gram);
  int pos = 0, neg = 0;
  for (auto& x : d.diagonal) {
    if (sgn(x) > 0) ++pos;
    else if (sgn(x) < 0) ++neg;
  }
  return {pos, neg};
}

std::size_t rank(const RatMatrix& gram) { return rank(RationalField{}, gram); }

Diagonalization<Rat> diagonalize(const RatMatrix& gram) { return diagonalize(RationalField{}, gram); }

std::vector<Rat> nonzero_diagonal(const RatMatrix& gram) {
  std::vector<Rat> out;
  for (auto& x : diagonalize(gram).diagonal)
    if (!is_zero(x)) out.push_back(x);
  return out;
}

void require_symmetric(const RatMatrix& gram, const char* what) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument(std::string(what) + " is not square");
  if (gram.rows() == 0) throw std::invalid_argument(std::string(what) + " is empty");
  if (!is_symmetric(gram)) throw std::invalid_argument(std::string(what) + " is not symmetric");
}

RatMatrix hyperbolic_form(std::size_t m) {
  RatMatrix h(2 * m, 2 * m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    h(2 * i, 2 * i + 1) = Rat(1, 2);
    h(2 * i + 1, 2 * i) = Rat(1, 2);
  }
  return h;
}

}  // namespace qp
