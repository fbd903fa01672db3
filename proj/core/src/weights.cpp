#include "mr6v/weights.hpp"

namespace mr6v {

Rational WeightFns::g_prod(std::span<const Rational> us, std::span<const Rational> vs) const {
  Rational acc(1);
  for (const auto& u : us)
    for (const auto& v : vs) acc *= g(u, v);
  return acc;
}

Rational WeightFns::h_prod(std::span<const Rational> us, std::span<const Rational> vs) const {
  Rational acc(1);
  for (const auto& u : us)
    for (const auto& v : vs) acc *= h(u, v);
  return acc;
}

Rational WeightFns::vandermonde(std::span<const Rational> xs) const {
  Rational acc(1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) acc *= (xs[j] - xs[i]) / c_;
  return acc;
}

Rational WeightFns::vandermonde_prime(std::span<const Rational> xs) const {
  Rational acc(1);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) acc *= (xs[i] - xs[j]) / c_;
  return acc;
}

}  // namespace mr6v
