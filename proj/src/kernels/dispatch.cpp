// Copyright 2026 The weylkit authors
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

#include "weylkit/errors.hpp"
#include "weylkit/kernels.hpp"

namespace weylkit::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(WEYLKIT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend& current() {
  static Backend b = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
  return b;
}

}  // namespace

Backend active_backend() { return current(); }

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  return cpu_has_avx2();
}

void force_backend(Backend b) {
  if (!backend_available(b))
    throw OutOfRangeError("kernels: backend " + backend_name(b) + " not available");
  current() = b;
}

void apply_unitary(const Mat4& u, const StateBatch& in, StateBatch& out) {
#if defined(WEYLKIT_HAVE_AVX2)
  if (current() == Backend::Avx2) {
    apply_unitary_avx2(u, in, out);
    return;
  }
#endif
  apply_unitary_scalar(u, in, out);
}

void state_entropy(const StateBatch& in, double* out) {
#if defined(WEYLKIT_HAVE_AVX2)
  if (current() == Backend::Avx2) {
    state_entropy_avx2(in, out);
    return;
  }
#endif
  state_entropy_scalar(in, out);
}

}  // namespace weylkit::kernels
