#include <algorithm>

#include "raag/errors.hpp"
#include "raag/random.hpp"
#include "raag/sharing.hpp"

namespace raag::sharing {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// p is prime, so a^(p-2) is the inverse of any nonzero a.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void check_parameters(std::uint64_t p, std::size_t t, std::size_t n) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (t < 2) throw DomainError("threshold t must be at least 2");
  if (t > n) throw DomainError("threshold t exceeds participant count n");
  if (n >= p) throw DomainError("need n < p so evaluation points 1..n are distinct and nonzero");
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t bit_width_for(std::uint64_t p) {
  std::size_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < p) ++k;
  return std::max<std::size_t>(k, 1);
}

BitColumn int_to_bits(std::uint64_t y, std::size_t k) {
  if (k == 0 || k > 64) throw DomainError("bit width must lie in 1..64");
  if (k < 64 && y >> k) throw DomainError(std::to_string(y) + " does not fit in " + std::to_string(k) + " bits");
  BitColumn c;
  c.bits.resize(k);
  for (std::size_t i = 0; i < k; ++i) c.bits[k - 1 - i] = static_cast<std::uint8_t>((y >> i) & 1U);
  return c;
}

std::uint64_t bits_to_int(const BitColumn& c) {
  if (c.size() > 64) throw DomainError("bit column wider than 64 bits");
  std::uint64_t y = 0;
  for (auto b : c.bits) y = (y << 1) | b;
  return y;
}

std::uint64_t evaluate_polynomial(std::span<const std::uint64_t> coefficients, std::uint64_t x,
                                  std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = (mul_mod(acc, x % p, p) + *it) % p;
  }
  return acc;
}

ShamirSplit shamir_split_with_coefficients(std::vector<std::uint64_t> coefficients, std::uint64_t p,
                                           std::size_t n) {
  check_parameters(p, coefficients.size(), n);
  for (auto a : coefficients) {
    if (a >= p) throw DomainError("polynomial coefficients must be residues mod p");
  }
  ShamirSplit out;
  out.setup.p = p;
  out.setup.t = coefficients.size();
  out.setup.n = n;
  out.setup.k = bit_width_for(p);
  out.setup.secret = coefficients.front();
  out.setup.coefficients = std::move(coefficients);
  for (std::uint64_t i = 1; i <= n; ++i) {
    out.points.push_back({i, evaluate_polynomial(out.setup.coefficients, i, p)});
  }
  return out;
}

ShamirSplit shamir_split(std::uint64_t x, std::uint64_t p, std::size_t t, std::size_t n,
                         std::uint64_t seed) {
  check_parameters(p, t, n);
  if (x >= p) throw DomainError("secret must be a residue mod p");
  Rng rng(seed);
  std::vector<std::uint64_t> coefficients{x};
  for (std::size_t d = 1; d < t; ++d) coefficients.push_back(uniform_below(rng, p));
  return shamir_split_with_coefficients(std::move(coefficients), p, n);
}

std::uint64_t lagrange_reconstruct(std::span<const ShamirPoint> points, std::uint64_t p,
                                   std::size_t t) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  if (t == 0) throw DomainError("threshold must be positive");
  std::vector<ShamirPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].index % p == 0) throw DomainError("evaluation index must be nonzero mod p");
    if (i && sorted[i].index == sorted[i - 1].index) throw DomainError("duplicate evaluation index");
  }
  if (sorted.size() < t) {
    throw DomainError("need " + std::to_string(t) + " points, got " + std::to_string(sorted.size()));
  }
  sorted.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sorted[i].index % p == sorted[j].index % p) throw DomainError("indices collide mod p");
    }
  }
  std::uint64_t secret = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const auto xi = sorted[i].index % p;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i) continue;
      const auto xj = sorted[j].index % p;
      num = mul_mod(num, (p - xj) % p, p);
      den = mul_mod(den, (xi + p - xj) % p, p);
    }
    const auto basis = mul_mod(num, inverse_mod(den, p), p);
    secret = (secret + mul_mod(sorted[i].value % p, basis, p)) % p;
  }
  return secret;
}

}  // namespace raag::sharing
