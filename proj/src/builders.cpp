#include "lazyhom/builders.hpp"

#include "lazyhom/errors.hpp"

namespace lazyhom {

FinDimHopf group_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Tensor3 mult(n), comult(n);
  QVector unit(n), counit(n, Rational(1));
  QMatrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comult(a, a, a) = 1;
    s(g.inverse(a), a) = 1;
    for (std::size_t b = 0; b < n; ++b) mult(a, b, g.mul(a, b)) = 1;
  }
  unit[g.identity()] = 1;
  return FinDimHopf("k[" + g.name() + "]", g.labels(), std::move(mult), std::move(unit), std::move(comult),
                    std::move(counit), std::move(s));
}

FinDimHopf function_algebra(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Tensor3 mult(n), comult(n);
  QVector unit(n, Rational(1)), counit(n);
  QMatrix s(n, n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("e[" + g.labels()[a] + "]");
    mult(a, a, a) = 1;
    s(g.inverse(a), a) = 1;
    for (std::size_t b = 0; b < n; ++b) comult(g.mul(a, b), a, b) = 1;
  }
  counit[g.identity()] = 1;
  return FinDimHopf("k^" + g.name(), std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                    std::move(counit), std::move(s));
}

FinDimHopf sweedler_h4() {
  enum { one, g, x, y };
  Tensor3 m(4), d(4);
  auto set = [&](int a, int b, int c, int v) { m(a, b, c) = v; };
  for (int a : {one, g, x, y}) {
    set(one, a, a, 1);
    if (a != one) set(a, one, a, 1);
  }
  set(g, g, one, 1);
  set(g, x, y, -1);  // gx = -xg
  set(g, y, x, -1);  // gxg = -x
  set(x, g, y, 1);
  set(y, g, x, 1);  // xgg = x
  // x^2 = xy = yx = y^2 = 0

  d(one, one, one) = 1;
  d(g, g, g) = 1;
  d(x, one, x) = 1;  // Δx = 1⊗x + x⊗g
  d(x, x, g) = 1;
  d(y, g, y) = 1;  // Δy = g⊗y + y⊗1
  d(y, y, one) = 1;

  QMatrix s(4, 4);
  s(one, one) = 1;
  s(g, g) = 1;
  s(y, x) = -1;  // S(x) = -y
  s(x, y) = 1;   // S(y) = x
  return FinDimHopf("H4", {"1", "g", "x", "y"}, std::move(m), QVector{1, 0, 0, 0}, std::move(d), QVector{1, 1, 0, 0},
                    std::move(s));
}

FinDimHopf dual(const FinDimHopf& h) {
  const std::size_t n = h.dim();
  Tensor3 mult(n), comult(n);
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("φ(" + l + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        mult(i, j, k) = h.comult()(k, i, j);
        comult(k, i, j) = h.mult()(i, j, k);
      }
  return FinDimHopf(h.name() + "*", std::move(labels), std::move(mult), h.counit(), std::move(comult), h.unit(),
                    h.antipode().transpose());
}

FinDimHopf tensor_square(const FinDimHopf& h) {
  const std::size_t n = h.dim(), N = n * n;
  Tensor3 mult(N), comult(N);
  QVector unit(N), counit(N);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(h.labels()[i] + "⊗" + h.labels()[j]);
      unit[i * n + j] = h.unit()[i] * h.unit()[j];
      counit[i * n + j] = h.counit()[i] * h.counit()[j];
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (const auto& t : h.product_terms(a, c))
            for (const auto& u : h.product_terms(b, d)) mult(a * n + b, c * n + d, t.k * n + u.k) += t.c * u.c;
      for (const auto& t : h.coproduct_terms(a))
        for (const auto& u : h.coproduct_terms(b)) comult(a * n + b, t.a * n + u.a, t.b * n + u.b) += t.c * u.c;
    }
  return FinDimHopf(h.name() + "⊗" + h.name(), std::move(labels), std::move(mult), std::move(unit), std::move(comult),
                    std::move(counit), kronecker(h.antipode(), h.antipode()));
}

FinDimHopf builtin_hopf(const std::string& spec) {
  if (spec == "sweedler") return sweedler_h4();
  if (spec.rfind("group:", 0) == 0) return group_algebra(group_by_name(spec.substr(6)));
  if (spec.rfind("functions:", 0) == 0) return function_algebra(group_by_name(spec.substr(10)));
  throw UsageError("unknown builtin '" + spec + "' (expected sweedler, group:<G> or functions:<G>)");
}

std::vector<std::string> builtin_hopf_names() {
  std::vector<std::string> names{"sweedler"};
  for (const auto& g : builtin_group_names()) names.push_back("group:" + g);
  for (const auto& g : builtin_group_names()) names.push_back("functions:" + g);
  return names;
}

}  // namespace lazyhom
