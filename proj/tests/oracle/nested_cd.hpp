#pragma once

// Independent Cayley-Dickson oracle: the algebra of level n is the type
// Pair<Pair<...<double>>>, built at compile time. Shares no code with the
// library's span-based kernel.

#include <cstddef>
#include <vector>

namespace oracle {

template <class T>
struct Pair {
  T a{}, b{};
};

inline double conj(double x) { return x; }
inline double add(double x, double y) { return x + y; }
inline double sub(double x, double y) { return x - y; }
inline double mul(double x, double y) { return x * y; }

template <class T>
Pair<T> conj(const Pair<T>& x) {
  return {conj(x.a), sub(T{}, x.b)};
}
template <class T>
Pair<T> add(const Pair<T>& x, const Pair<T>& y) {
  return {add(x.a, y.a), add(x.b, y.b)};
}
template <class T>
Pair<T> sub(const Pair<T>& x, const Pair<T>& y) {
  return {sub(x.a, y.a), sub(x.b, y.b)};
}
template <class T>
Pair<T> mul(const Pair<T>& x, const Pair<T>& y) {
  // (a, b)(c, d) = (ac - d*b, da + bc*)
  return {sub(mul(x.a, y.a), mul(conj(y.b), x.b)), add(mul(y.b, x.a), mul(x.b, conj(y.a)))};
}

template <int Level>
struct Alg {
  using type = Pair<typename Alg<Level - 1>::type>;
};
template <>
struct Alg<0> {
  using type = double;
};
template <int Level>
using alg_t = typename Alg<Level>::type;

inline void flatten(double x, std::vector<double>& out) { out.push_back(x); }
template <class T>
void flatten(const Pair<T>& x, std::vector<double>& out) {
  flatten(x.a, out);
  flatten(x.b, out);
}

inline void unflatten(const double*& p, double& x) { x = *p++; }
template <class T>
void unflatten(const double*& p, Pair<T>& x) {
  unflatten(p, x.a);
  unflatten(p, x.b);
}

template <int Level>
alg_t<Level> from_coords(const std::vector<double>& c) {
  alg_t<Level> x{};
  const double* p = c.data();
  unflatten(p, x);
  return x;
}

template <class T>
std::vector<double> coords(const T& x) {
  std::vector<double> out;
  flatten(x, out);
  return out;
}

template <int Level>
std::vector<double> product(const std::vector<double>& x, const std::vector<double>& y) {
  return coords(mul(from_coords<Level>(x), from_coords<Level>(y)));
}

inline std::vector<double> product(int level, const std::vector<double>& x, const std::vector<double>& y) {
  switch (level) {
    case 0: return product<0>(x, y);
    case 1: return product<1>(x, y);
    case 2: return product<2>(x, y);
    case 3: return product<3>(x, y);
    case 4: return product<4>(x, y);
    case 5: return product<5>(x, y);
    default: return {};
  }
}

inline std::vector<double> basis(int level, std::size_t i) {
  std::vector<double> e(std::size_t{1} << level, 0.0);
  e[i] = 1.0;
  return e;
}

}  // namespace oracle
