#pragma once

#include <cstdint>
#include <random>

#include "ietrel/iet.hpp"
#include "ietrel/scalar.hpp"

// Seeded generators for property tests and `ietrel iet random`. Everything is
// driven by std::mt19937_64 so a seed reproduces the same objects everywhere.

namespace ietrel {

using Rng = std::mt19937_64;

Permutation random_permutation(Rng& rng, int n);

/// Positive lengths summing to 1. Rational lengths have denominators <= 60;
/// cubic ones have small coefficients in 1, a, a^2.
Iet random_iet(Rng& rng, int n, bool cubic);

/// Lengths in (1/q)N, n <= q.
Iet random_q_rational(Rng& rng, long q, int n);

/// Small rational, or small element of Q(a) when `cubic`; may be zero or negative.
Scalar random_scalar(Rng& rng, bool cubic);

}  // namespace ietrel
