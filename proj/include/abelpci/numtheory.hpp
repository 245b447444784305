#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace abelpci {

// Trial division; inputs here are group orders and cyclotomic moduli.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace abelpci
