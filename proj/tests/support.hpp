// Copyright 2026 The zxnf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Helpers shared by the test binaries: seeded random terms and an
// independent float model of the generator matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "zx/interp.hpp"
#include "zx/term.hpp"

namespace zx::testing {

using Cx = std::complex<double>;
using CMat = std::vector<std::vector<Cx>>;

inline Angle random_angle(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<std::int64_t> k(0, 8 * n - 1);
  return Angle::pi(k(rng), 4 * n);
}

/// A random term built from `gens` generators on at most `max_wires` wires,
/// with phases in the pi/4n fragment (real phases when n == 0).
inline Term random_term(std::mt19937_64& rng, std::int64_t n, int gens = 8, int max_wires = 4) {
  std::uniform_int_distribution<int> inputs_dist(0, 2);
  CircuitBuilder b(inputs_dist(rng));
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_int_distribution<int> legs(0, 2);
  std::uniform_real_distribution<double> real(-4.0, 4.0);
  for (int g = 0; g < gens; ++g) {
    const int open = static_cast<int>(b.wires().size());
    Term gate;
    const int choice = pick(rng);
    if (choice <= 4) {
      int in = std::min(legs(rng), open);
      int out = legs(rng);
      if (open - in + out > max_wires) out = 0;
      Angle a = n == 0 ? Angle::radians(real(rng)) : random_angle(rng, n);
      gate = choice % 2 == 0 ? Term::z(in, out, a) : Term::x(in, out, a);
    } else if (choice == 5 && open >= 1) {
      gate = Term::h();
    } else if (choice == 6 && open >= 2) {
      gate = Term::swap();
    } else if (choice == 7 && open >= 2) {
      gate = Term::cup();
    } else if (choice == 8 && open + 2 <= max_wires) {
      gate = Term::cap();
    } else if (open >= 1) {
      gate = Term::id();
    } else {
      gate = Term::z(0, 1, n == 0 ? Angle::radians(real(rng)) : random_angle(rng, n));
    }
    std::vector<int> wires = b.wires();
    std::shuffle(wires.begin(), wires.end(), rng);
    wires.resize(static_cast<std::size_t>(gate.inputs()));
    b.apply(gate, wires);
  }
  std::vector<int> out = b.wires();
  std::shuffle(out.begin(), out.end(), rng);
  return b.finish(out);
}

inline CMat cmat(std::size_t r, std::size_t c) { return CMat(r, std::vector<Cx>(c)); }

inline CMat ckron(const CMat& a, const CMat& b) {
  CMat r = cmat(a.size() * b.size(), a[0].size() * b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[0].size(); ++l) r[i * b.size() + k][j * b[0].size() + l] = a[i][j] * b[k][l];
  return r;
}

/// |v1 ... vk><w1 ... wl| as an explicit outer product.
inline CMat outer_power(const std::vector<Cx>& ket, int m, const std::vector<Cx>& bra, int n) {
  CMat k = {{1.0}};
  for (int i = 0; i < m; ++i) k = ckron(k, CMat{{ket[0]}, {ket[1]}});
  CMat b = {{1.0}};
  for (int i = 0; i < n; ++i) b = ckron(b, CMat{{std::conj(bra[0]), std::conj(bra[1])}});
  CMat r = cmat(k.size(), b[0].size());
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] = k[i][0] * b[0][j];
  return r;
}

inline CMat add(const CMat& a, const CMat& b, Cx scale) {
  CMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[i][j] += scale * b[i][j];
  return r;
}

/// Spider matrices written out from the ket/bra definitions.
inline CMat z_model(int n, int m, double alpha) {
  return add(outer_power({1, 0}, m, {1, 0}, n), outer_power({0, 1}, m, {0, 1}, n), std::polar(1.0, alpha));
}

inline CMat x_model(int n, int m, double alpha) {
  const double s = std::sqrt(0.5);
  return add(outer_power({s, s}, m, {s, s}, n), outer_power({s, -s}, m, {s, -s}, n), std::polar(1.0, alpha));
}

inline double max_diff(const FloatMatrix& a, const CMat& b) {
  double worst = 0.0;
  if (static_cast<std::size_t>(a.rows()) != b.size() || static_cast<std::size_t>(a.cols()) != b[0].size()) return 1e300;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  return worst;
}

inline Matrix exact_matrix(const std::vector<std::vector<DyadicCyclotomic>>& rows, std::int64_t order) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[0].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return Matrix(m, order);
}

}  // namespace zx::testing
