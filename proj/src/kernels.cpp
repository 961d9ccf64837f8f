#include "qcong/kernels.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcong::kernels {

namespace {

bool worth_threading(std::size_t work) {
#ifdef _OPENMP
  return work >= (1u << 14) && !omp_in_parallel() && omp_get_max_threads() > 1;
#else
  (void)work;
  return false;
#endif
}

std::size_t max_bits(CoeffView a) {
  std::size_t bits = 0;
  for (const auto& c : a) {
    if (sgn(c) != 0) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  }
  return bits;
}

// Writes |c| for the coefficients whose sign equals `sign` into limb slots of
// width `w`, then returns the packed integer.
mpz_class pack(CoeffView a, std::size_t w, int sign) {
  mpz_class out;
  const std::size_t total = a.size() * w;
  mp_limb_t* limbs = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
  std::memset(limbs, 0, total * sizeof(mp_limb_t));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != sign) continue;
    const std::size_t n = mpz_size(a[i].get_mpz_t());
    std::memcpy(limbs + i * w, mpz_limbs_read(a[i].get_mpz_t()), n * sizeof(mp_limb_t));
  }
  std::size_t used = total;
  while (used > 0 && limbs[used - 1] == 0) --used;
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(used));
  return out;
}

mpz_class pack_signed(CoeffView a, std::size_t w) {
  mpz_class pos = pack(a, w, 1);
  mpz_class neg = pack(a, w, -1);
  return pos - neg;
}

}  // namespace

namespace serial {

Coeffs mul_schoolbook(CoeffView a, CoeffView b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

void divrem_monic(Coeffs& rem, CoeffView b, Coeffs& quot) {
  const std::size_t nb = b.size();
  quot.clear();
  if (rem.size() < nb) return;
  quot.assign(rem.size() - nb + 1, mpz_class());
  // Nonzero support of the divisor below its leading term.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j + 1 < nb; ++j) {
    if (sgn(b[j]) != 0) support.push_back(j);
  }
  for (std::size_t i = rem.size(); i-- > nb - 1;) {
    const std::size_t base = i - (nb - 1);
    if (sgn(rem[i]) == 0) continue;
    mpz_class& qc = quot[base];
    mpz_swap(qc.get_mpz_t(), rem[i].get_mpz_t());
    for (std::size_t j : support) {
      mpz_submul(rem[base + j].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  rem.resize(nb - 1);
}

}  // namespace serial

namespace parallel {

Coeffs mul_schoolbook(CoeffView a, CoeffView b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  Coeffs out(n);
  const auto na = static_cast<long>(a.size());
  const auto nb = static_cast<long>(b.size());
#pragma omp parallel for schedule(dynamic, 64) if (worth_threading(a.size() * b.size()))
  for (long k = 0; k < static_cast<long>(n); ++k) {
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    mpz_ptr acc = out[k].get_mpz_t();
    for (long i = lo; i <= hi; ++i) {
      mpz_addmul(acc, a[i].get_mpz_t(), b[k - i].get_mpz_t());
    }
  }
  return out;
}

void divrem_monic(Coeffs& rem, CoeffView b, Coeffs& quot) {
  const std::size_t nb = b.size();
  if (!worth_threading(rem.size() * nb) || nb < 256) {
    serial::divrem_monic(rem, b, quot);
    return;
  }
  quot.assign(rem.size() >= nb ? rem.size() - nb + 1 : 0, mpz_class());
  if (rem.size() < nb) return;
  const long top = static_cast<long>(rem.size()) - 1;
  const long lowest = static_cast<long>(nb) - 1;
#pragma omp parallel
  for (long i = top; i >= lowest; --i) {
    const std::size_t base = static_cast<std::size_t>(i - lowest);
#pragma omp single
    mpz_swap(quot[base].get_mpz_t(), rem[i].get_mpz_t());
    // Implicit barrier after single: every thread sees the quotient digit.
    if (sgn(quot[base]) != 0) {
#pragma omp for schedule(static)
      for (long j = 0; j < lowest; ++j) {
        mpz_submul(rem[base + j].get_mpz_t(), quot[base].get_mpz_t(), b[j].get_mpz_t());
      }
    }
  }
  rem.resize(nb - 1);
}

}  // namespace parallel

Coeffs mul_kronecker(CoeffView a, CoeffView b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shortest = std::min(a.size(), b.size());
  std::size_t log_terms = 0;
  while ((std::size_t{1} << log_terms) < shortest) ++log_terms;
  const std::size_t bound_bits = max_bits(a) + max_bits(b) + log_terms + 2;
  const std::size_t w = (bound_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  mpz_class pa = pack_signed(a, w);
  mpz_class pb = (a.data() == b.data() && a.size() == b.size()) ? pa : pack_signed(b, w);
  mpz_class prod = pa * pb;

  const std::size_t n = a.size() + b.size() - 1;
  Coeffs out(n);
  const bool negative = sgn(prod) < 0;
  if (negative) mpz_neg(prod.get_mpz_t(), prod.get_mpz_t());
  const mp_limb_t* limbs = mpz_limbs_read(prod.get_mpz_t());
  const std::size_t avail = mpz_size(prod.get_mpz_t());

  // Balanced digits: a slot value u plus incoming carry c becomes u + c - X
  // whenever it reaches X/2, where X = 2^(w*GMP_NUMB_BITS).
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, w * GMP_NUMB_BITS - 1);
  mpz_class radix = half * 2;
  bool carry = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = i * w;
    mpz_class& v = out[i];
    if (start < avail) {
      const std::size_t len = std::min(w, avail - start);
      std::size_t used = len;
      while (used > 0 && limbs[start + used - 1] == 0) --used;
      if (used > 0) {
        mp_limb_t* dst = mpz_limbs_write(v.get_mpz_t(), static_cast<mp_size_t>(used));
        std::memcpy(dst, limbs + start, used * sizeof(mp_limb_t));
        mpz_limbs_finish(v.get_mpz_t(), static_cast<mp_size_t>(used));
      }
    }
    if (carry) v += 1;
    if (v >= half) {
      v -= radix;
      carry = true;
    } else {
      carry = false;
    }
    if (negative) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  }
  return out;
}

Coeffs multiply(CoeffView a, CoeffView b, MulAlgorithm alg) {
  switch (alg) {
    case MulAlgorithm::schoolbook:
      return serial::mul_schoolbook(a, b);
    case MulAlgorithm::schoolbook_parallel:
      return parallel::mul_schoolbook(a, b);
    case MulAlgorithm::kronecker:
      return mul_kronecker(a, b);
    case MulAlgorithm::automatic:
      break;
  }
  if (std::min(a.size(), b.size()) < kKroneckerThreshold) return serial::mul_schoolbook(a, b);
  return mul_kronecker(a, b);
}

}  // namespace qcong::kernels
