#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <ios>
#include <limits>
#include <type_traits>
#include <vector>

namespace phasekit {

// 113-bit IEEE quad; default working precision behind the double API.
using quad = boost::multiprecision::float128;
// ~166-bit binary float, used by the unbranched-chain recursion.
using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

namespace detail {

template <class T>
auto real_part(const T& x) {
  if constexpr (is_complex<T>::value)
    return x.real();
  else
    return x;
}

template <class T>
auto magnitude(const T& x) {
  using std::abs;
  return abs(x);
}

}  // namespace detail

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>)
    return x;
  else if constexpr (std::is_arithmetic_v<From> || std::is_arithmetic_v<To>)
    return static_cast<To>(x);
  else
    // between multiprecision backends: go through a decimal string to keep every bit
    return To(x.str(std::numeric_limits<From>::max_digits10, std::ios_base::scientific));
}

template <class To, class From>
std::vector<To> vector_cast(const std::vector<From>& v) {
  std::vector<To> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar_cast<To>(x));
  return out;
}

}  // namespace phasekit
